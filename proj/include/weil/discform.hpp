#pragma once

#include <cstdint>
#include <set>

#include <gmpxx.h>

#include "weil/cyclo.hpp"

namespace weil {

/// Signature (b+, b-) of the ambient quadratic space.
struct Signature {
  int plus = 2;
  int minus = 1;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// The finite quadratic module (Z/2mZ, Q) with Q(x) = x^2 / 4m.
///
/// Residues are canonical representatives in [0, 2m). The signature is carried
/// explicitly so that wrong-phase controls can be expressed; the default (2, 1)
/// satisfies b+ - b- = 1 (mod 8).
class DiscriminantForm {
 public:
  explicit DiscriminantForm(std::int64_t m, Signature sig = {});

  std::int64_t index() const { return m_; }
  std::int64_t group_order() const { return 2 * m_; }
  std::int64_t level() const { return 4 * m_; }
  const Signature& signature() const { return sig_; }

  /// Order of the cyclotomic field holding e(1/8), e(Q(gamma)) and sqrt(2m):
  /// lcm(8, 4m).
  int working_order() const;

  /// Canonical representative of x in [0, 2m).
  std::int64_t reduce(std::int64_t x) const;

  /// gamma^2 mod 4m, so that e(Q(gamma)) = zeta_{4m}^q_numerator(gamma).
  std::int64_t q_numerator(std::int64_t gamma) const;

 private:
  std::int64_t m_;
  Signature sig_;
};

/// Q(gamma) = gamma^2 / 4m reduced into [0, 1).
mpq_class q_value(const DiscriminantForm& df, std::int64_t gamma);

/// (gamma, delta) = Q(gamma + delta) - Q(gamma) - Q(delta) = gamma delta / 2m mod 1.
mpq_class bilinear(const DiscriminantForm& df, std::int64_t gamma, std::int64_t delta);

/// Both sides of Milgram's formula, computed exactly.
struct MilgramSides {
  CyclotomicNumber gauss_sum;   // sum_gamma e(Q(gamma))
  CyclotomicNumber closed_form; // sqrt(2m) e((b+ - b-) / 8)
};

MilgramSides milgram_sides(const DiscriminantForm& df);
bool milgram_check(const DiscriminantForm& df);

/// 1 if gamma = 0 or m (mod 2m), 2 otherwise.
int s_factor(const DiscriminantForm& df, std::int64_t gamma);

/// { n mod 4m : (-1)^k n = x^2 (mod 4m) for some x }.
std::set<std::int64_t> square_classes(std::int64_t m, std::int64_t k);

/// True when (-1)^k n is a square modulo 4m.
bool in_plus_space(std::int64_t n, std::int64_t m, std::int64_t k);

}  // namespace weil
