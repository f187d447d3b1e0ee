#pragma once

#include <cstdint>
#include <random>

#include "weil/expansions.hpp"
#include "weil/jacobi.hpp"
#include "weil/metaplectic.hpp"

namespace weil::corpus {

using Rng = std::mt19937_64;

/// Random exact plus-space expansion of weight k + 1/2 on [-n_neg, n_pos]:
/// c+ on a random subset of admissible indices, c- on some negative ones.
HarmonicExpansion plus_space_expansion(Rng& rng, std::int64_t m, std::int64_t k, std::int64_t n_neg, std::int64_t n_pos);

/// Random index-m form with keys in [d_min, d_max]; symmetric forces c(D, r) = c(D, -r).
JacobiForm jacobi_form(Rng& rng, int k, std::int64_t m, std::int64_t d_min, std::int64_t d_max, bool symmetric);

/// (a b; c d) with c = 0 (mod 4m), d > 0, |c| <= 20m, and a of either sign.
IntMatrix2 gamma0_element(Rng& rng, std::int64_t m);

}  // namespace weil::corpus
