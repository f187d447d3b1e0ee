#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "weil/discform.hpp"

using weil::DiscriminantForm;

TEST_CASE("quadratic and bilinear values") {
  DiscriminantForm df(3);
  CHECK(df.group_order() == 6);
  CHECK(df.level() == 12);
  CHECK(df.working_order() == 24);
  CHECK(weil::q_value(df, 1) == mpq_class(1, 12));
  CHECK(weil::q_value(df, 4) == mpq_class(1, 3));
  CHECK(weil::q_value(df, -2) == mpq_class(1, 3));
  for (int g = 0; g < 6; ++g)
    for (int d = 0; d < 6; ++d) {
      mpq_class lhs = weil::q_value(df, g + d) - weil::q_value(df, g) - weil::q_value(df, d);
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), lhs.get_num_mpz_t(), lhs.get_den_mpz_t());
      lhs -= fl;
      CHECK(lhs == weil::bilinear(df, g, d));
    }
}

TEST_CASE("Milgram holds exactly for signature (2,1)") {
  for (int m = 1; m <= 30; ++m) CHECK(weil::milgram_check(DiscriminantForm(m)));
}

TEST_CASE("Milgram sides agree with floating sums") {
  for (int m : {1, 4, 7, 12}) {
    const auto sides = weil::milgram_sides(DiscriminantForm(m));
    std::complex<double> direct = 0;
    for (int g = 0; g < 2 * m; ++g) direct += std::polar(1.0, 2 * std::numbers::pi * g * g / (4.0 * m));
    CHECK(std::abs(sides.gauss_sum.to_complex() - direct) < 1e-9);
  }
}

TEST_CASE("wrong phase is detected") {
  for (int m : {1, 2, 5}) CHECK_FALSE(weil::milgram_check(DiscriminantForm(m, {1, 1})));
}

TEST_CASE("square classes and plus space") {
  const auto sq = weil::square_classes(1, 0);
  CHECK(sq == std::set<std::int64_t>{0, 1});
  CHECK(weil::square_classes(1, 1) == std::set<std::int64_t>{0, 3});
  for (int m = 1; m <= 6; ++m)
    for (int k = 0; k < 2; ++k)
      for (int n = -30; n <= 30; ++n) {
        const std::int64_t r = ((n % (4 * m)) + 4 * m) % (4 * m);
        CHECK(weil::in_plus_space(n, m, k) == (weil::square_classes(m, k).count(r) == 1));
      }
}
