#pragma once

#include <cstdint>
#include <vector>

#include "weil/cyclo_matrix.hpp"
#include "weil/discform.hpp"
#include "weil/kernels.hpp"
#include "weil/metaplectic.hpp"

namespace weil {

/// A matrix of rho_L (or its dual) on C[L'/L], indexed (beta, gamma) by
/// residues mod 2m: entry (beta, gamma) = <rho(g) e_gamma, e_beta>.
struct WeilMatrix {
  CycloMatrix matrix;
  bool dual = false;

  const CyclotomicNumber& operator()(std::size_t beta, std::size_t gamma) const { return matrix(beta, gamma); }
};

/// rho(T) e_gamma = e(Q(gamma)) e_gamma.
WeilMatrix rho_T(const DiscriminantForm& df, bool dual = false);

/// rho(S) e_gamma = e((b- - b+) / 8) / sqrt(2m) sum_delta e(-(gamma, delta)) e_delta.
WeilMatrix rho_S(const DiscriminantForm& df, bool dual = false);

/// rho evaluated along mp_decompose(g); the dual conjugates every entry.
WeilMatrix rho_eval(const DiscriminantForm& df, const MpElement& g, bool dual = false);

/// rho evaluated along the given word (no decomposition step).
WeilMatrix rho_word(const DiscriminantForm& df, const Word& w, bool dual = false);

/// Closed form of rho((1 0; 1 1)~) with (beta, gamma) entry
/// e((b- - b+) / 8) / sqrt(2m) e(Q(beta) - (beta, gamma) + Q(gamma)), raised to the n-th power.
WeilMatrix shintani_unipotent(const DiscriminantForm& df, std::int64_t n);

/// epsilon_d^-1 for odd d > 0: 1 if d = 1 (mod 4), -i if d = 3 (mod 4).
CyclotomicNumber epsilon_inverse(std::int64_t d);

struct BorcherdsResult {
  CyclotomicNumber scalar;  // (c / d) epsilon_d^-1
  bool holds = false;       // the all-ones vector is an eigenvector with that eigenvalue
};

/// For M = (a b; c d) in Gamma_0(4m) with d > 0, checks
/// rho((a 4mb; c/4m d)~) sum_gamma e_gamma = (c / d) epsilon_d^-1 sum_gamma e_gamma exactly.
BorcherdsResult borcherds_eigencheck(const DiscriminantForm& df, const IntMatrix2& m);

/// True when w is unitary: w^* w = I exactly.
bool is_unitary(const WeilMatrix& w);

/// Sum of the basis vectors, sum_gamma e_gamma, at the form's working order.
std::vector<CyclotomicNumber> all_ones(const DiscriminantForm& df);

/// Generator matrices in the factored group-ring form used by the word evaluator.
namespace ring {
kernels::RingMatrix s_matrix(const DiscriminantForm& df, bool inverse);
kernels::RingMatrix t_power(const DiscriminantForm& df, std::int64_t power);
kernels::RingMatrix z_power(const DiscriminantForm& df, int power);
}  // namespace ring

}  // namespace weil
