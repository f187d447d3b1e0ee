#include "weil/corpus.hpp"

#include "weil/numtheory.hpp"

namespace weil::corpus {

namespace {

mpq_class random_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  long n = 0;
  while (n == 0) n = num(rng);
  mpq_class q(n, static_cast<unsigned long>(den(rng)));
  q.canonicalize();
  return q;
}

}  // namespace

HarmonicExpansion plus_space_expansion(Rng& rng, std::int64_t m, std::int64_t k, std::int64_t n_neg, std::int64_t n_pos) {
  HarmonicExpansion f(static_cast<int>(2 * k + 1), mpq_class(static_cast<long>(-n_neg)), mpq_class(static_cast<long>(n_pos)));
  std::bernoulli_distribution keep(0.5), with_minus(0.4);
  for (std::int64_t n = -n_neg; n <= n_pos; ++n) {
    if (!in_plus_space(n, m, k) || !keep(rng)) continue;
    const mpq_class idx(static_cast<long>(n));
    f.set_plus(idx, random_rational(rng));
    if (n < 0 && with_minus(rng)) f.set_minus(idx, random_rational(rng));
  }
  return f;
}

JacobiForm jacobi_form(Rng& rng, int k, std::int64_t m, std::int64_t d_min, std::int64_t d_max, bool symmetric) {
  JacobiForm phi(k, m, d_max, d_min);
  std::bernoulli_distribution keep(0.5), with_minus(0.4);
  for (std::int64_t D = d_min; D <= d_max; ++D) {
    for (std::int64_t r = 0; r < 2 * m; ++r) {
      if (nt::mod(D - r * r, 4 * m) != 0) continue;
      const std::int64_t mirror = nt::mod(-r, 2 * m);
      if (symmetric && mirror < r) continue;
      if (keep(rng)) {
        const mpq_class v = random_rational(rng);
        phi.set_plus(D, r, v);
        if (symmetric) phi.set_plus(D, mirror, v);
      }
      if (D > 0 && with_minus(rng)) {
        const mpq_class v = random_rational(rng);
        phi.set_minus(D, r, v);
        if (symmetric) phi.set_minus(D, mirror, v);
      }
    }
  }
  return phi;
}

IntMatrix2 gamma0_element(Rng& rng, std::int64_t m) {
  const std::int64_t level = 4 * m;
  std::uniform_int_distribution<std::int64_t> tpick(-5, 5), dpick(1, 80), shift(-3, 2), bpick(-6, 6);
  for (;;) {
    const std::int64_t c = level * tpick(rng);
    const std::int64_t d = dpick(rng);
    if (c == 0) {
      if (d != 1) continue;
      return {1, bpick(rng), 0, 1};
    }
    if (nt::gcd(c, d) != 1) continue;
    const std::int64_t ac = c < 0 ? -c : c;
    const std::int64_t a = nt::inverse_mod(nt::mod(d, ac), ac) + ac * shift(rng);
    return {a, (a * d - 1) / c, c, d};
  }
}

}  // namespace weil::corpus
