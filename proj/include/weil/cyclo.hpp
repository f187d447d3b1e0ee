#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

#include "weil/mpfr_real.hpp"

namespace weil {

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree
/// first; the result is monic of degree phi(N). Cached, thread-safe.
const std::vector<std::int64_t>& cyclotomic_polynomial(int order);

/// An exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
///
/// Values are canonical: the coefficient vector always has length phi(N)
/// and is reduced modulo the N-th cyclotomic polynomial, so two values of the
/// same order are equal iff their coefficients are. Binary operations between
/// different orders lift both operands to Q(zeta_lcm).
class CyclotomicNumber {
 public:
  /// Zero in Q(zeta_1) = Q.
  CyclotomicNumber();
  /// The rational r viewed in Q(zeta_order).
  explicit CyclotomicNumber(const mpq_class& r, int order = 1);

  /// Builds sum_j c_j zeta_N^j from an arbitrary-length coefficient list,
  /// folding exponents modulo N and reducing.
  static CyclotomicNumber from_powers(int order, std::vector<mpq_class> coefficients);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The constant coefficient; meaningful when is_rational().
  const mpq_class& rational_part() const { return coeffs_[0]; }

  /// The same value in Q(zeta_target); target must be a multiple of order().
  CyclotomicNumber lift(int target_order) const;

  /// Complex conjugation zeta -> zeta^-1.
  CyclotomicNumber conj() const;

  /// Multiplication by zeta_order()^k, cheaper than a general product.
  CyclotomicNumber times_root(std::int64_t k) const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const mpq_class& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const mpq_class& b) { return a *= b; }
  friend CyclotomicNumber operator*(const mpq_class& b, CyclotomicNumber a) { return a *= b; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Fast double-precision embedding zeta_N -> exp(2 pi i / N).
  std::complex<double> to_complex() const;

 private:
  CyclotomicNumber(int order, std::vector<mpq_class> reduced);

  int order_ = 1;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

/// e(p / q) = exp(2 pi i p / q) in Q(zeta_q).
CyclotomicNumber cyc_root_of_unity(std::int64_t p, std::int64_t q);

/// The positive square root of n > 0, built from sqrt(2) = zeta_8 + zeta_8^-1
/// and quadratic Gauss sums over the odd primes dividing the squarefree part.
CyclotomicNumber cyc_sqrt_nat(std::int64_t n);

/// sum_j c_j exp(2 pi i j / N) rounded to `precision` bits, with relative
/// error at most 2^(4 - precision). precision >= 53.
MpfrComplex cyc_embed(const CyclotomicNumber& x, long precision);

/// Smallest common order of a and b.
int common_order(int a, int b);

}  // namespace weil
