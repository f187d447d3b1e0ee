#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "weil/cyclo_matrix.hpp"
#include "weil/expansions.hpp"

namespace weil {

struct SplitOptions {
  /// Accept m that is neither 1 nor prime.
  bool allow_any_m = false;
};

/// f -> F with F_gamma = (1 / s(gamma)) sum_{(-1)^k n = gamma^2 (4m)} c_f(n, y / 4m) q^(n / 4m).
/// Requires f in the plus space at weight k + 1/2; the result is dual for odd k.
VectorForm split_to_vector(const HarmonicExpansion& f, std::int64_t m, std::int64_t k, const SplitOptions& opt = {});

/// F -> f(tau) = sum_gamma F_gamma(4m tau). Throws unless F has the support
/// demanded by rho(T); the result is checked against the plus space.
HarmonicExpansion combine_to_scalar(const VectorForm& f);

struct ProofMatrices {
  std::int64_t m = 1;
  std::vector<std::int64_t> j;  // residues coprime to 4m, increasing
  CycloMatrix A;                // phi(4m) x 2m, e(j gamma^2 / 4m)
  CycloMatrix C;                // 2m x phi(4m), e(-j beta^2 / 4m)
  CycloMatrix R;                // 2m x 2m, e(-1/8) / sqrt(2m) e(-l gamma / 2m)
  CycloMatrix B;                // C A
};

ProofMatrices build_proof_matrices(std::int64_t m);

/// One entry where the case table 2 phi(m) / -2 / 0 disagrees with the character sum.
struct TableDeviation {
  std::int64_t beta = 0, gamma = 0;
  std::int64_t computed = 0;
  std::int64_t table = 0;
};

struct RankReport {
  std::int64_t m = 1;
  std::int64_t rank = 0;
  std::int64_t expected_rank = 0;  // 2 phi(m)
  bool rank_matches = false;
  /// The leading 2 phi(m) columns have full column rank.
  bool first_columns_independent = false;
  std::int64_t leading_rank = 0;
  std::vector<std::vector<mpz_class>> B;  // exact integer entries
  std::vector<TableDeviation> deviations;
  /// B from the matrix product agrees with the entrywise character sums.
  bool product_matches_bruteforce = false;
};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::int64_t integer_rank(std::vector<std::vector<mpz_class>> rows);

/// Exact rank of B = CA and the deviations of B from the case table. Throws
/// std::invalid_argument unless m is 1 or prime (override with allow_any_m).
RankReport rank_lemma_check(std::int64_t m, bool allow_any_m = false);

/// The case table value: 2 phi(m) if beta = gamma, -2 if beta = gamma (mod 2), else 0.
std::int64_t lemma_table_entry(std::int64_t m, std::int64_t beta, std::int64_t gamma);

/// sum_{j in (Z/4mZ)^*} e(j (gamma^2 - beta^2) / 4m), exactly.
std::int64_t b_entry_bruteforce(std::int64_t m, std::int64_t beta, std::int64_t gamma);

struct GaussReport {
  bool holds = false;
  std::size_t mismatches = 0;
  CycloMatrix AR;
  CycloMatrix closed_form;  // (4m / j) eps_j^-1 e(-j^-1 gamma^2 / 4m)
};

GaussReport gauss_sum_identity_check(std::int64_t m);

/// The constant c with sum_gamma e(j gamma^2 / 4m) F_gamma(-1/tau) = c tau^w sum_gamma e(-j^-1 gamma^2 / 4m) F_gamma(tau):
/// (4m / j) eps_j^-1 for rho_L, and its conjugate taken at -j for the dual.
CyclotomicNumber fj_constant(std::int64_t m, std::int64_t j, bool dual);

struct FjReport {
  std::int64_t j = 1;
  std::vector<PointRecord> points;
  double max_deviation = 0;
  double tolerance = 0;
  bool pass = false;
};

/// Both sides of the f_j identity for a vector form, evaluated at each point.
FjReport fj_identity_check(const VectorForm& F, std::int64_t j, const std::vector<std::complex<double>>& points,
                           double tolerance, long precision = 128);

/// fj_identity_check applied to split_to_vector(f, m, k).
FjReport f_j_consistency_check(const HarmonicExpansion& f, std::int64_t m, std::int64_t k, std::int64_t j,
                               const std::vector<std::complex<double>>& points, double tolerance, long precision = 128);

/// The theta series sum_x q^(x^2) on the window [0, n_max].
HarmonicExpansion builtin_theta(std::int64_t n_max);

}  // namespace weil
