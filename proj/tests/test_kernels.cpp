#include <random>

#include "doctest.h"
#include "weil/kernels.hpp"

using weil::CycloMatrix;
using weil::CyclotomicNumber;

namespace {

CycloMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int order, double density) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_real_distribution<double> u(0, 1);
  CycloMatrix m(r, c, order);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (u(rng) > density) continue;
      std::vector<mpq_class> p(static_cast<std::size_t>(order));
      for (auto& x : p)
        if (u(rng) < 0.3) x = mpq_class(coeff(rng), 1 + static_cast<long>(rng() % 4));
      m.set(i, j, CyclotomicNumber::from_powers(order, p));
    }
  return m;
}

}  // namespace

TEST_CASE("ring round trip") {
  std::mt19937_64 rng(3);
  const auto m = random_matrix(rng, 4, 5, 24, 0.7);
  CHECK(weil::kernels::from_ring(weil::kernels::to_ring(m)) == m);
}

TEST_CASE("parallel, serial and reference products agree") {
  std::mt19937_64 rng(11);
  for (int order : {8, 12, 20, 40}) {
    for (double density : {0.2, 1.0}) {
      const auto a = random_matrix(rng, 6, 4, order, density);
      const auto b = random_matrix(rng, 4, 5, order, density);
      const auto ref = weil::kernels::multiply_reference(a, b);
      const auto ra = weil::kernels::to_ring(a), rb = weil::kernels::to_ring(b);
      CHECK(weil::kernels::from_ring(weil::kernels::multiply(ra, rb)) == ref);
      CHECK(weil::kernels::from_ring(weil::kernels::multiply_serial(ra, rb)) == ref);
      CHECK((a * b) == ref);
    }
  }
}

TEST_CASE("mixed orders and shape errors") {
  std::mt19937_64 rng(5);
  const auto a = random_matrix(rng, 3, 3, 8, 1.0);
  const auto b = random_matrix(rng, 3, 3, 12, 1.0);
  const auto p = a * b;
  CHECK(p.order() == 24);
  CHECK(p == weil::kernels::multiply_reference(a.lift(24), b.lift(24)));
  const auto c = random_matrix(rng, 2, 3, 8, 1.0);
  CHECK_THROWS(a * c);
}

TEST_CASE("reduce is idempotent") {
  std::mt19937_64 rng(8);
  auto r = weil::kernels::to_ring(random_matrix(rng, 3, 3, 20, 1.0));
  weil::kernels::reduce(r);
  auto s = r;
  weil::kernels::reduce_serial(s);
  CHECK(s.coeffs == r.coeffs);
}
