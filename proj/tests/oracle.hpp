#pragma once

// Floating-point reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "weil/metaplectic.hpp"

namespace oracle {

using cd = std::complex<double>;
using Dense = std::vector<std::vector<cd>>;

inline cd e(double x) { return std::polar(1.0, 2 * std::numbers::pi * x); }

/// phi(tau) for (M, phi) given as a product of generators, evaluated by
/// composing square roots directly: phi_{g h}(tau) = phi_g(h tau) phi_h(tau).
struct Cocycle {
  weil::IntMatrix2 m{};
  // phi as a function of tau, sampled at a fixed point set
  std::vector<cd> values;
};

inline cd mobius(const weil::IntMatrix2& m, cd tau) {
  return (static_cast<double>(m.a) * tau + static_cast<double>(m.b)) /
         (static_cast<double>(m.c) * tau + static_cast<double>(m.d));
}

inline cd j(const weil::IntMatrix2& m, cd tau) { return static_cast<double>(m.c) * tau + static_cast<double>(m.d); }

/// Sign s with phi(tau) = s sqrt(c tau + d) for the product g1 g2,
/// computed from phi1(M2 tau) phi2(tau) at tau.
inline int product_sign(const weil::MpElement& g1, const weil::MpElement& g2, cd tau) {
  const auto& m1 = g1.matrix();
  const auto& m2 = g2.matrix();
  const cd phi = static_cast<double>(g1.sign()) * std::sqrt(j(m1, mobius(m2, tau))) * static_cast<double>(g2.sign()) *
                 std::sqrt(j(m2, tau));
  const cd ref = std::sqrt(j(m1 * m2, tau));
  return std::real(phi / ref) > 0 ? 1 : -1;
}

inline Dense identity(std::size_t n) {
  Dense out(n, std::vector<cd>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense out(a.size(), std::vector<cd>(b[0].size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t l = 0; l < b[0].size(); ++l) out[i][l] += a[i][k] * b[k][l];
  return out;
}

/// rho(S), rho(T) from the defining formulas, signature (b+, b-).
inline Dense rho_S(int m, int bp = 2, int bm = 1) {
  const int n = 2 * m;
  Dense out(n, std::vector<cd>(n));
  for (int d = 0; d < n; ++d)
    for (int g = 0; g < n; ++g) out[d][g] = e((bm - bp) / 8.0) / std::sqrt(static_cast<double>(n)) * e(-g * d / static_cast<double>(n));
  return out;
}

inline Dense rho_T(int m) {
  const int n = 2 * m;
  Dense out(n, std::vector<cd>(n, 0.0));
  for (int g = 0; g < n; ++g) out[g][g] = e(g * g / (4.0 * m));
  return out;
}

inline double distance(const Dense& a, const std::vector<cd>& flat) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a[i].size(); ++k) worst = std::max(worst, std::abs(a[i][k] - flat[i * a[i].size() + k]));
  return worst;
}

/// A random word in S and T^{+-1} with its SL2 matrix.
inline std::vector<weil::Generator> random_letters(std::mt19937_64& rng, int length) {
  std::vector<weil::Generator> out;
  std::uniform_int_distribution<int> pick(0, 3);
  for (int i = 0; i < length; ++i) {
    switch (pick(rng)) {
      case 0:
        out.push_back(weil::Generator::S);
        break;
      case 1:
        out.push_back(weil::Generator::SInv);
        break;
      case 2:
        out.push_back(weil::Generator::T);
        break;
      default:
        out.push_back(weil::Generator::TInv);
    }
  }
  return out;
}

/// Gamma(a, y) = int_y^oo t^(a-1) e^-t dt by adaptive exp-sinh quadrature in
/// 50-digit arithmetic, after the shift t = y + u.
inline double inc_gamma(double a, double y) {
  using big = boost::multiprecision::cpp_bin_float_50;
  boost::math::quadrature::exp_sinh<big> integrator;
  const big by = y, ba = a;
  auto f = [&](big u) {
    const big t = by + u;
    return boost::multiprecision::pow(t, ba - 1) * boost::multiprecision::exp(-t);
  };
  return static_cast<double>(integrator.integrate(f, big(1e-40)));
}

/// sum over x in Z of q^(x^2), summed until the terms vanish in double.
inline cd theta(cd tau) {
  cd sum = 1;
  for (int x = 1;; ++x) {
    const cd term = 2.0 * std::exp(cd(0, 2 * std::numbers::pi) * static_cast<double>(x) * static_cast<double>(x) * tau);
    sum += term;
    if (std::abs(term) < 1e-300 || x > 100000) break;
  }
  return sum;
}

}  // namespace oracle
