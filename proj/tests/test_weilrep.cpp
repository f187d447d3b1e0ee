#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "weil/numtheory.hpp"
#include "weil/weilrep.hpp"

using weil::DiscriminantForm;
using weil::MpElement;

namespace {

oracle::Dense dense_word(int m, const weil::Word& w) {
  oracle::Dense acc = oracle::identity(2 * static_cast<std::size_t>(m));
  const auto S = oracle::rho_S(m), T = oracle::rho_T(m);
  auto inverse = [](const oracle::Dense& a) {
    oracle::Dense out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < a.size(); ++k) out[i][k] = std::conj(a[k][i]);
    return out;
  };
  for (auto g : w.letters) {
    switch (g) {
      case weil::Generator::S:
        acc = oracle::mul(acc, S);
        break;
      case weil::Generator::SInv:
        acc = oracle::mul(acc, inverse(S));
        break;
      case weil::Generator::T:
        acc = oracle::mul(acc, T);
        break;
      case weil::Generator::TInv:
        acc = oracle::mul(acc, inverse(T));
        break;
      case weil::Generator::Z:
        acc = oracle::mul(acc, oracle::mul(S, S));
        break;
    }
  }
  for (int i = 0; i < w.z_power; ++i) acc = oracle::mul(acc, oracle::mul(S, S));
  return acc;
}

}  // namespace

TEST_CASE("generators against the defining formulas") {
  for (int m : {1, 2, 3, 5, 6}) {
    DiscriminantForm df(m);
    CHECK(oracle::distance(oracle::rho_S(m), weil::rho_S(df).matrix.to_complex()) < 1e-12);
    CHECK(oracle::distance(oracle::rho_T(m), weil::rho_T(df).matrix.to_complex()) < 1e-12);
    CHECK(weil::is_unitary(weil::rho_S(df)));
    CHECK(weil::is_unitary(weil::rho_T(df)));
  }
}

TEST_CASE("relations of the metaplectic group hold in rho") {
  for (int m : {1, 2, 3, 4, 5, 7}) {
    DiscriminantForm df(m);
    const auto S = weil::rho_S(df).matrix, T = weil::rho_T(df).matrix;
    const auto S2 = S * S;
    const auto S4 = S2 * S2;
    const auto id = weil::CycloMatrix::identity(S.rows(), df.working_order());
    CHECK(S4 == -id);
    CHECK((S4 * S4).is_identity());
    const auto ST = S * T;
    CHECK((ST * ST * ST) == S2);
    CHECK(weil::rho_eval(df, MpElement::Z()).matrix == S2);
    CHECK(weil::rho_eval(df, weil::mp_pow(MpElement::Z(), 2)).matrix == -id);
  }
}

TEST_CASE("rho is a homomorphism on random elements") {
  std::mt19937_64 rng(31);
  for (int m : {1, 3, 5}) {
    DiscriminantForm df(m);
    for (int it = 0; it < 12; ++it) {
      const weil::Word w1{oracle::random_letters(rng, 1 + static_cast<int>(rng() % 6)), static_cast<int>(rng() % 4)};
      const weil::Word w2{oracle::random_letters(rng, 1 + static_cast<int>(rng() % 6)), static_cast<int>(rng() % 4)};
      const MpElement g1 = weil::word_product(w1), g2 = weil::word_product(w2);
      const auto lhs = weil::rho_eval(df, weil::mp_mul(g1, g2)).matrix;
      CHECK(lhs == weil::rho_eval(df, g1).matrix * weil::rho_eval(df, g2).matrix);
      CHECK(lhs == weil::rho_word(df, w1).matrix * weil::rho_word(df, w2).matrix);
      CHECK(oracle::distance(dense_word(m, w1), weil::rho_word(df, w1).matrix.to_complex()) < 1e-9);
    }
  }
}

TEST_CASE("dual representation is the conjugate") {
  DiscriminantForm df(3);
  const MpElement g = weil::mp_tilde({2, 1, 1, 1});
  const auto r = weil::rho_eval(df, g), rd = weil::rho_eval(df, g, true);
  CHECK(rd.dual);
  CHECK(rd.matrix == r.matrix.conj());
}

TEST_CASE("unipotent closed form") {
  for (int m : {1, 2, 3, 5, 6}) {
    DiscriminantForm df(m);
    const auto closed = weil::shintani_unipotent(df, 1).matrix;
    CHECK(closed == weil::rho_eval(df, weil::mp_tilde({1, 0, 1, 1})).matrix);
    CHECK(closed == weil::rho_word(df, weil::parse_word("S T' S'")).matrix);
    for (int n : {-3, -1, 2, 5}) CHECK(weil::shintani_unipotent(df, n).matrix == weil::rho_eval(df, weil::mp_tilde({1, 0, n, 1})).matrix);
    CHECK(weil::shintani_unipotent(df, 0).matrix.is_identity());
  }
}

TEST_CASE("all-ones eigenvector on Gamma_0(4m)") {
  for (int m : {1, 2, 3, 5}) {
    DiscriminantForm df(m);
    const std::int64_t N = 4 * m;
    int tested = 0;
    for (std::int64_t c = -3 * N; c <= 3 * N; c += N) {
      for (std::int64_t d = 1; d < 40 && tested < 40; d += 2) {
        if (weil::nt::gcd(c, d) != 1) continue;
        std::int64_t a = 1, bb = 0;
        if (c == 0) {
          if (d != 1) continue;
        } else {
          a = weil::nt::inverse_mod(weil::nt::mod(d, std::abs(c)), std::abs(c));
          bb = (a * d - 1) / c;
        }
        const auto res = weil::borcherds_eigencheck(df, {a, bb, c, d});
        CHECK(res.holds);
        ++tested;
      }
    }
    CHECK(tested > 10);
  }
  DiscriminantForm df(2);
  CHECK_THROWS(weil::borcherds_eigencheck(df, {1, 0, 4, 1}));
  CHECK_THROWS(weil::borcherds_eigencheck(df, {-1, 0, 8, -1}));
}
