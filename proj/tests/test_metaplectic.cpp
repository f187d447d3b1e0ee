#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "weil/metaplectic.hpp"

using weil::IntMatrix2;
using weil::MpElement;

TEST_CASE("generator relations") {
  const MpElement S = MpElement::S(), T = MpElement::T(), Z = MpElement::Z();
  CHECK(weil::mp_mul(S, S) == MpElement({-1, 0, 0, -1}, 1));
  CHECK(weil::mp_mul(S, S) == Z);
  CHECK(weil::mp_pow(Z, 2) == MpElement({1, 0, 0, 1}, -1));
  CHECK(weil::mp_pow(Z, 4) == MpElement::identity());
  CHECK(weil::mp_pow(S, 8) == MpElement::identity());
  const MpElement st = weil::mp_mul(S, T);
  CHECK(weil::mp_pow(st, 3) == weil::mp_mul(S, S));
  for (const auto& g : {S, T, Z, st}) {
    CHECK(weil::mp_mul(g, weil::mp_inverse(g)) == MpElement::identity());
    CHECK(weil::mp_mul(weil::mp_inverse(g), g) == MpElement::identity());
  }
  // Z is central.
  for (const auto& g : {S, T, st}) CHECK(weil::mp_mul(Z, g) == weil::mp_mul(g, Z));
}

TEST_CASE("invalid elements") {
  CHECK_THROWS_AS(MpElement({1, 1, 1, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(MpElement({1, 0, 0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(weil::parse_word("S X"), std::invalid_argument);
}

TEST_CASE("product signs match direct square roots at several points") {
  std::mt19937_64 rng(2024);
  const std::vector<oracle::cd> points{{0, 2}, {0.31, 1.7}, {-0.45, 0.9}};
  for (int it = 0; it < 300; ++it) {
    weil::Word w1{oracle::random_letters(rng, 1 + static_cast<int>(rng() % 6)), static_cast<int>(rng() % 4)};
    weil::Word w2{oracle::random_letters(rng, 1 + static_cast<int>(rng() % 6)), static_cast<int>(rng() % 4)};
    const MpElement g1 = weil::word_product(w1), g2 = weil::word_product(w2);
    const MpElement p = weil::mp_mul(g1, g2);
    for (const auto& tau : points) CHECK(oracle::product_sign(g1, g2, tau) == p.sign());
  }
}

TEST_CASE("associativity on random elements") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const MpElement a = weil::word_product({oracle::random_letters(rng, 5), 0});
    const MpElement b = weil::word_product({oracle::random_letters(rng, 5), 1});
    const MpElement c = weil::word_product({oracle::random_letters(rng, 5), 3});
    CHECK(weil::mp_mul(weil::mp_mul(a, b), c) == weil::mp_mul(a, weil::mp_mul(b, c)));
  }
}

TEST_CASE("decomposition reproduces the element") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 300; ++it) {
    const weil::Word w{oracle::random_letters(rng, 1 + static_cast<int>(rng() % 10)), static_cast<int>(rng() % 4)};
    const MpElement g = weil::word_product(w);
    CHECK(weil::word_product(weil::mp_decompose(g)) == g);
    const MpElement minus(g.matrix(), -g.sign());
    CHECK(weil::word_product(weil::mp_decompose(minus)) == minus);
  }
  for (const IntMatrix2& m : {IntMatrix2{1, 0, 0, 1}, IntMatrix2{-1, 0, 0, -1}, IntMatrix2{2, 1, 1, 1}, IntMatrix2{5, 2, 12, 5},
                              IntMatrix2{-7, -3, 12, 5}, IntMatrix2{1, 0, -4, 1}}) {
    CHECK(weil::word_product(weil::mp_decompose(weil::mp_tilde(m))) == weil::mp_tilde(m));
  }
}

TEST_CASE("word text round trip") {
  const auto w = weil::parse_word("S T T' S' Z Z");
  CHECK(w.letters.size() == 4);
  CHECK(w.z_power == 2);
  CHECK(weil::format_word(w) == "S T T' S' Z Z");
  CHECK(weil::parse_word("Z Z Z Z").z_power == 0);
}
