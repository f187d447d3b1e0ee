#include "weil/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "weil/isomap.hpp"
#include "weil/numtheory.hpp"

namespace weil {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kRoundoff = 64 * std::numeric_limits<double>::epsilon();

mpq_class over_level(std::int64_t D, std::int64_t m) {
  mpq_class q(static_cast<long>(-D), static_cast<unsigned long>(4 * m));
  q.canonicalize();
  return q;
}

}  // namespace

JacobiForm::JacobiForm(int k, std::int64_t m, std::int64_t d_max, std::int64_t d_min)
    : k_(k), m_(m), d_max_(d_max), d_min_(d_min) {
  if (m < 1) throw std::invalid_argument("JacobiForm: index must be positive");
  if (d_min > d_max) throw std::invalid_argument("JacobiForm: d_min exceeds d_max");
}

JacobiForm::Key JacobiForm::key(std::int64_t D, std::int64_t r) const {
  if (nt::mod(D - r * r, 4 * m_) != 0)
    throw std::invalid_argument("JacobiForm: D = " + std::to_string(D) + " is not r^2 mod 4m for r = " + std::to_string(r));
  if (D < d_min_ || D > d_max_) throw std::invalid_argument("JacobiForm: D = " + std::to_string(D) + " outside window");
  return {D, nt::mod(r, 2 * m_)};
}

void JacobiForm::set_plus(std::int64_t D, std::int64_t r, const Coeff& v) {
  const Key k = key(D, r);
  if (weil::is_zero(v)) {
    plus_.erase(k);
  } else {
    plus_[k] = v;
  }
}

void JacobiForm::set_minus(std::int64_t D, std::int64_t r, const Coeff& v) {
  if (D <= 0) throw std::invalid_argument("JacobiForm: c- requires D > 0");
  const Key k = key(D, r);
  if (weil::is_zero(v)) {
    minus_.erase(k);
  } else {
    minus_[k] = v;
  }
}

bool JacobiForm::is_symmetric() const {
  for (const auto* part : {&plus_, &minus_}) {
    for (const auto& [k, v] : *part) {
      auto it = part->find({k.first, nt::mod(-k.second, 2 * m_)});
      if (it == part->end() || !(it->second == v)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- theta series

namespace {

struct ThetaSum {
  std::complex<double> value;
  double tail = 0;
  double abs_sum = 0;
};

// One side of the tail, starting at the first omitted |r| = s0 with sign `side`.
double theta_tail(std::int64_t m, std::int64_t s0, int side, double y, double v) {
  const double s = static_cast<double>(s0);
  const double md = static_cast<double>(m);
  const double log_first = -kTwoPi * y * s * s / (4 * md) - kTwoPi * v * side * s;
  const double log_ratio = -kTwoPi * y * (s + md) - 2 * kTwoPi * md * v * side;
  if (log_ratio >= 0) return std::numeric_limits<double>::infinity();
  return std::exp(log_first) / (1 - std::exp(log_ratio));
}

ThetaSum theta_sum(std::int64_t m, std::int64_t mu, std::complex<double> tau, std::complex<double> z,
                   std::int64_t radius) {
  if (!(tau.imag() > 0)) throw std::invalid_argument("theta: Im tau must be positive");
  if (radius < 0) throw std::invalid_argument("theta: radius must be non-negative");
  const std::int64_t n = 2 * m;
  const std::complex<double> i(0, 1);
  ThetaSum out;
  std::int64_t r = -radius + nt::mod(mu + radius, n);
  for (; r <= radius; r += n) {
    const double rd = static_cast<double>(r);
    const std::complex<double> t = std::exp(kTwoPi * i * (rd * rd * tau / (4.0 * static_cast<double>(m)) + rd * z));
    out.value += t;
    out.abs_sum += std::abs(t);
  }
  // r is now the first omitted value above the radius; mirror for the negative side.
  const std::int64_t below = -radius - 1 - nt::mod(-radius - 1 - mu, n);
  out.tail = theta_tail(m, r, 1, tau.imag(), z.imag()) + theta_tail(m, -below, -1, tau.imag(), z.imag());
  return out;
}

}  // namespace

ThetaValue theta_series_eval(std::int64_t m, std::int64_t mu, std::complex<double> tau, std::complex<double> z,
                             std::int64_t radius, double accuracy) {
  if (m < 1) throw std::invalid_argument("theta_series_eval: m must be positive");
  const ThetaSum s = theta_sum(m, mu, tau, z, radius);
  if (!(s.tail <= accuracy))
    throw TruncationError("theta_series_eval: tail bound " + std::to_string(s.tail) + " exceeds accuracy");
  return {s.value, s.tail};
}

// ---------------------------------------------------------------- decomposition

VectorForm theta_decompose(const JacobiForm& phi) {
  const std::int64_t m = phi.index();
  VectorForm out(DiscriminantForm(m), true, 2 * phi.weight() - 1, over_level(phi.d_max(), m), over_level(phi.d_min(), m));
  for (const auto& [k, v] : phi.plus()) out.components[static_cast<std::size_t>(k.second)].set_plus(over_level(k.first, m), v);
  for (const auto& [k, v] : phi.minus())
    out.components[static_cast<std::size_t>(k.second)].set_minus(over_level(k.first, m), v);
  return out;
}

JacobiForm reconstruct(const VectorForm& h) {
  if (!h.dual) throw std::invalid_argument("reconstruct: components must be of dual type");
  if (h.weight_num() % 2 == 0) throw std::invalid_argument("reconstruct: weight must be half-integral");
  if (!verify_T_transform(h)) throw std::invalid_argument("reconstruct: component support violates the dual rho(T)");
  const std::int64_t m = h.df.index();
  const mpq_class level(static_cast<long>(4 * m));
  const auto& first = h.components.front();
  for (const auto& c : h.components)
    if (c.window_lo() != first.window_lo() || c.window_hi() != first.window_hi() || c.weight_num() != first.weight_num())
      throw std::invalid_argument("reconstruct: components disagree on window or weight");
  mpz_class d_max, d_min;
  const mpq_class top = -first.window_lo() * level, bottom = -first.window_hi() * level;
  mpz_fdiv_q(d_max.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
  mpz_cdiv_q(d_min.get_mpz_t(), bottom.get_num_mpz_t(), bottom.get_den_mpz_t());
  JacobiForm out((h.weight_num() + 1) / 2, m, d_max.get_si(), d_min.get_si());
  for (std::size_t g = 0; g < h.components.size(); ++g) {
    for (const auto& [nu, p] : h.components[g].coefficients()) {
      const mpq_class Dq = -nu * level;
      const std::int64_t D = Dq.get_num().get_si();
      if (!is_zero(p.plus)) out.set_plus(D, static_cast<std::int64_t>(g), p.plus);
      if (!is_zero(p.minus)) out.set_minus(D, static_cast<std::int64_t>(g), p.minus);
    }
  }
  return out;
}

// ---------------------------------------------------------------- evaluation

JacobiValue eval_direct(const JacobiForm& phi, std::complex<double> tau, std::complex<double> z, std::int64_t radius,
                        long precision) {
  const std::int64_t m = phi.index();
  const double y = tau.imag();
  const std::complex<double> i(0, 1);
  const int two_a = 3 - 2 * phi.weight();
  JacobiValue out;
  double abs_sum = 0;
  auto run = [&](const std::map<JacobiForm::Key, Coeff>& part, bool minus) {
    for (const auto& [k, v] : part) {
      const auto [D, rho] = k;
      const double g = minus ? inc_gamma(two_a, std::numbers::pi * static_cast<double>(D) * y / static_cast<double>(m), precision) : 1.0;
      const double c = to_double(v) * g;
      const ThetaSum th = theta_sum(m, rho, tau, z, radius);
      // the same r-range as the theta sum, term by term from (n, r)
      std::int64_t r = -radius + nt::mod(rho + radius, 2 * m);
      std::complex<double> s = 0;
      for (; r <= radius; r += 2 * m) {
        const std::int64_t n = (r * r - D) / (4 * m);
        const double rd = static_cast<double>(r);
        s += std::exp(kTwoPi * i * (static_cast<double>(n) * tau + rd * z));
      }
      out.value += c * s;
      const double shift = std::exp(kTwoPi * y * static_cast<double>(D) / (4.0 * static_cast<double>(m)));
      out.bound += std::abs(c) * shift * th.tail;
      abs_sum += std::abs(c) * shift * th.abs_sum;
    }
  };
  run(phi.plus(), false);
  run(phi.minus(), true);
  out.bound += kRoundoff * abs_sum;
  return out;
}

JacobiValue eval_decomposed(const JacobiForm& phi, std::complex<double> tau, std::complex<double> z,
                            std::int64_t radius, long precision) {
  const VectorForm h = theta_decompose(phi);
  const std::int64_t m = phi.index();
  const double y = tau.imag();
  const int two_a = 3 - 2 * phi.weight();
  JacobiValue out;
  double abs_sum = 0;
  for (std::size_t mu = 0; mu < h.components.size(); ++mu) {
    const auto& comp = h.components[mu];
    if (comp.is_zero()) continue;
    EvalOptions opt;
    opt.precision = precision;
    const std::complex<double> hv = eval_point(comp, tau, opt).value;
    double habs = 0;
    for (const auto& [nu, p] : comp.coefficients()) {
      double c = is_zero(p.plus) ? 0.0 : std::abs(to_double(p.plus));
      if (!is_zero(p.minus))
        c += std::abs(to_double(p.minus)) * inc_gamma(two_a, 2 * kTwoPi * std::abs(nu.get_d()) * y, precision);
      habs += c * std::exp(-kTwoPi * nu.get_d() * y);
    }
    const ThetaSum th = theta_sum(m, static_cast<std::int64_t>(mu), tau, z, radius);
    out.value += hv * th.value;
    out.bound += habs * th.tail;
    abs_sum += habs * th.abs_sum;
  }
  out.bound += kRoundoff * abs_sum;
  return out;
}

// ---------------------------------------------------------------- heat operator

PiMonomial operator*(const PiMonomial& a, const PiMonomial& b) {
  PiMonomial out{a.coeff * b.coeff, a.pi_power + b.pi_power, a.i_power + b.i_power};
  // normalise i^q to q in {0, 1}
  int q = ((out.i_power % 4) + 4) % 4;
  if (q >= 2) {
    out.coeff = -out.coeff;
    q -= 2;
  }
  out.i_power = q;
  out.coeff.canonicalize();
  if (sgn(out.coeff) == 0) out = PiMonomial{mpq_class(0), 0, 0};
  return out;
}

HeatCertificate heat_operator_term_check(std::int64_t m, std::int64_t r) {
  if (m < 1) throw std::invalid_argument("heat_operator_term_check: m must be positive");
  const PiMonomial two_pi_i{mpq_class(2), 1, 1};
  const PiMonomial exponent_tau{mpq_class(static_cast<long>(r * r), static_cast<unsigned long>(4 * m)), 0, 0};
  const PiMonomial exponent_z{mpq_class(static_cast<long>(r)), 0, 0};
  HeatCertificate out;
  out.tau_term = two_pi_i * exponent_tau;
  const PiMonomial dz = two_pi_i * exponent_z;
  // -1 / (8 pi i m) = -(1 / 8m) pi^-1 i^-1
  const PiMonomial prefactor = PiMonomial{mpq_class(-1, static_cast<unsigned long>(8 * m)), -1, 0} * PiMonomial{mpq_class(1), 0, -1};
  out.z_term = prefactor * (dz * dz);
  const PiMonomial neg_z{-out.z_term.coeff, out.z_term.pi_power, out.z_term.i_power};
  out.zero = out.tau_term == neg_z || (sgn(out.tau_term.coeff) == 0 && sgn(out.z_term.coeff) == 0);
  return out;
}

// ---------------------------------------------------------------- reduced Casimir

std::complex<double> casimir_reduced_fd(const JacobiFunction& phi, double w, std::int64_t m, std::complex<double> tau,
                                        std::complex<double> z, double h) {
  if (!(h > 0)) throw std::invalid_argument("casimir_reduced_fd: step must be positive");
  const std::complex<double> i(0, 1);
  const std::complex<double> lap = laplacian_fd([&](std::complex<double> t) { return phi(t, z); }, w, tau, h);
  auto dzz = [&](std::complex<double> t) { return (phi(t, z + h) - 2.0 * phi(t, z) + phi(t, z - h)) / (h * h); };
  const std::complex<double> gx = (dzz(tau + h) - dzz(tau - h)) / (2 * h);
  const std::complex<double> gy = (dzz(tau + i * h) - dzz(tau - i * h)) / (2 * h);
  const std::complex<double> dbar = 0.5 * (gx + i * gy);
  const std::complex<double> two_iy = tau - std::conj(tau);
  const std::complex<double> factor = two_iy * two_iy / (4 * std::numbers::pi * i * static_cast<double>(m));
  return -2.0 * lap + factor * dbar;
}

std::complex<double> casimir_reduced_fd(const JacobiForm& phi, std::complex<double> tau, std::complex<double> z, double h,
                                        std::int64_t radius, long precision) {
  return casimir_reduced_fd(
      [&](std::complex<double> t, std::complex<double> zz) { return eval_decomposed(phi, t, zz, radius, precision).value; },
      phi.weight() - 0.5, phi.index(), tau, z, h);
}

// ---------------------------------------------------------------- composite map

HarmonicExpansion thm2_map(const JacobiForm& phi) {
  if (phi.weight() % 2 != 0) throw std::invalid_argument("thm2_map: weight must be even");
  const std::int64_t m = phi.index();
  if (m != 1 && !nt::is_prime(m)) throw std::invalid_argument("thm2_map: m must be 1 or prime");
  if (!phi.is_symmetric()) throw std::invalid_argument("thm2_map: coefficients must satisfy c(D, r) = c(D, -r)");
  return combine_to_scalar(theta_decompose(phi));
}

JacobiForm thm2_inverse(const HarmonicExpansion& f, std::int64_t m) {
  if (f.weight_num() % 2 == 0) throw std::invalid_argument("thm2_inverse: weight must be half-integral");
  const std::int64_t k = (f.weight_num() - 1) / 2;
  if (nt::mod(k, 2) != 1) throw std::invalid_argument("thm2_inverse: weight must be k - 1/2 with k even");
  return reconstruct(split_to_vector(f, m, k));
}

}  // namespace weil
