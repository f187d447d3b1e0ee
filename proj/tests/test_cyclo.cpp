#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "weil/cyclo.hpp"
#include "weil/numtheory.hpp"

using weil::CyclotomicNumber;

namespace {

std::complex<double> root(long p, long q) {
  const double t = 2 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
  return {std::cos(t), std::sin(t)};
}

CyclotomicNumber random_element(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<mpq_class> c(static_cast<std::size_t>(order));
  for (auto& x : c) x = mpq_class(coeff(rng), 1 + (rng() % 3));
  return CyclotomicNumber::from_powers(order, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(weil::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(weil::cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(weil::cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient -2.
  const auto& p = weil::cyclotomic_polynomial(105);
  CHECK(p.size() == 49);
  CHECK(std::count(p.begin(), p.end(), -2) == 2);
  for (int n : {5, 8, 9, 20, 24, 56}) CHECK(static_cast<std::int64_t>(weil::cyclotomic_polynomial(n).size()) == weil::nt::euler_phi(n) + 1);
}

TEST_CASE("roots of unity embed correctly") {
  for (int q : {1, 3, 4, 8, 12, 20, 24}) {
    for (int p = -q; p <= q; ++p) {
      const auto z = weil::cyc_root_of_unity(p, q).to_complex();
      CHECK(std::abs(z - root(p, q)) < 1e-12);
    }
  }
  CHECK(weil::cyc_root_of_unity(3, 12) == weil::cyc_root_of_unity(1, 4));
  CHECK(weil::cyc_root_of_unity(2, 4) == CyclotomicNumber(mpq_class(-1)));
}

TEST_CASE("sqrt of naturals") {
  for (int n = 1; n <= 60; ++n) {
    const CyclotomicNumber s = weil::cyc_sqrt_nat(n);
    CHECK((s * s) == CyclotomicNumber(mpq_class(n)));
    CHECK(std::abs(s.to_complex() - std::complex<double>(std::sqrt(n), 0)) < 1e-10);
  }
  CHECK_THROWS_AS(weil::cyc_sqrt_nat(0), std::invalid_argument);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(17);
  for (int order : {8, 12, 20, 28}) {
    for (int it = 0; it < 10; ++it) {
      const auto a = random_element(rng, order), b = random_element(rng, order), c = random_element(rng, order);
      CHECK((a * (b + c)) == (a * b + a * c));
      CHECK((a * b) == (b * a));
      CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-8 * (1 + std::abs(a.to_complex() * b.to_complex())));
      CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-9);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("mixed orders lift to the lcm") {
  const auto a = weil::cyc_root_of_unity(1, 3);
  const auto b = weil::cyc_root_of_unity(1, 4);
  const auto p = a * b;
  CHECK(p.order() == 12);
  CHECK(p == weil::cyc_root_of_unity(7, 12));
  CHECK(a.lift(24).lift(24) == a.lift(24));
}

TEST_CASE("certified embedding") {
  const auto x = weil::cyc_sqrt_nat(7) * weil::cyc_root_of_unity(1, 8);
  const auto e = weil::cyc_embed(x, 200);
  weil::MpfrReal expect(200);
  mpfr_set_ui(expect.get(), 7, MPFR_RNDN);
  mpfr_div_ui(expect.get(), expect.get(), 2, MPFR_RNDN);
  mpfr_sqrt(expect.get(), expect.get(), MPFR_RNDN);  // sqrt(7/2) = sqrt 7 cos(pi/4)
  weil::MpfrReal diff(200);
  mpfr_sub(diff.get(), e.re.get(), expect.get(), MPFR_RNDN);
  CHECK(std::abs(diff.to_double()) < 1e-55);
  mpfr_sub(diff.get(), e.im.get(), expect.get(), MPFR_RNDN);
  CHECK(std::abs(diff.to_double()) < 1e-55);
  CHECK_THROWS(weil::cyc_embed(x, 20));
}
