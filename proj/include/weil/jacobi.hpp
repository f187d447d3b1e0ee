#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <utility>

#include <gmpxx.h>

#include "weil/expansions.hpp"

namespace weil {

/// Coefficient data of an index-m form
///
///   sum_{D <= D_max} c+(D, r) q^n zeta^r + sum_{D > 0} c-(D, r) Gamma(3/2 - k, pi D y / m) q^n zeta^r,
///
/// with D = r^2 - 4nm, keyed by (D, r mod 2m). Stored data is complete for
/// d_min <= D <= d_max.
class JacobiForm {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (D, r in [0, 2m))

  JacobiForm(int k, std::int64_t m, std::int64_t d_max, std::int64_t d_min);

  int weight() const { return k_; }
  std::int64_t index() const { return m_; }
  std::int64_t d_max() const { return d_max_; }
  std::int64_t d_min() const { return d_min_; }

  /// Throws std::invalid_argument unless D = r^2 (mod 4m) and D lies in the
  /// window (D > 0 as well for c-). Zero values erase the key.
  void set_plus(std::int64_t D, std::int64_t r, const Coeff& v);
  void set_minus(std::int64_t D, std::int64_t r, const Coeff& v);

  const std::map<Key, Coeff>& plus() const { return plus_; }
  const std::map<Key, Coeff>& minus() const { return minus_; }

  bool is_zero() const { return plus_.empty() && minus_.empty(); }
  /// c(D, r) = c(D, -r) for both parts.
  bool is_symmetric() const;

  friend bool operator==(const JacobiForm&, const JacobiForm&) = default;

 private:
  Key key(std::int64_t D, std::int64_t r) const;

  int k_;
  std::int64_t m_, d_max_, d_min_;
  std::map<Key, Coeff> plus_, minus_;
};

struct ThetaValue {
  std::complex<double> value;
  double tail = 0;
};

/// theta_{m,mu}(tau, z) = sum_{r = mu (2m)} q^(r^2/4m) zeta^r over |r| <= radius.
/// Throws TruncationError when the tail bound exceeds accuracy.
ThetaValue theta_series_eval(std::int64_t m, std::int64_t mu, std::complex<double> tau, std::complex<double> z,
                             std::int64_t radius, double accuracy = std::numeric_limits<double>::infinity());

/// h_mu with c+ at index -D/4m from each (D, mu) key and c- likewise; weight
/// k - 1/2, dual type.
VectorForm theta_decompose(const JacobiForm& phi);

/// Inverse of theta_decompose on stored data.
JacobiForm reconstruct(const VectorForm& h);

struct JacobiValue {
  std::complex<double> value;
  double bound = 0;  // r-truncation bound plus a roundoff allowance
};

/// Direct sum over stored keys and |r| <= radius.
JacobiValue eval_direct(const JacobiForm& phi, std::complex<double> tau, std::complex<double> z, std::int64_t radius,
                        long precision = 128);
/// sum_mu h_mu(tau) theta_{m,mu}(tau, z) over the same stored data.
JacobiValue eval_decomposed(const JacobiForm& phi, std::complex<double> tau, std::complex<double> z,
                            std::int64_t radius, long precision = 128);

/// A rational multiple of pi^p i^q (q in {0, 1}).
struct PiMonomial {
  mpq_class coeff;
  int pi_power = 0;
  int i_power = 0;

  friend PiMonomial operator*(const PiMonomial& a, const PiMonomial& b);
  friend bool operator==(const PiMonomial&, const PiMonomial&) = default;
};

struct HeatCertificate {
  PiMonomial tau_term;  // d/dtau of q^(r^2/4m) zeta^r, divided by the term
  PiMonomial z_term;    // -(1/(8 pi i m)) d^2/dz^2 of the term, divided by the term
  bool zero = false;    // the two monomials cancel exactly
};

HeatCertificate heat_operator_term_check(std::int64_t m, std::int64_t r);

using JacobiFunction = std::function<std::complex<double>(std::complex<double>, std::complex<double>)>;

/// -2 Delta_w phi + ((tau - conj tau)^2 / (4 pi i m)) d^3 phi / dconj(tau) dz^2 by central
/// differences with step h, w = weight_num / 2 of the theta components.
std::complex<double> casimir_reduced_fd(const JacobiFunction& phi, double w, std::int64_t m, std::complex<double> tau,
                                        std::complex<double> z, double h);
/// Same operator on phi evaluated through its theta decomposition (w = k - 1/2).
std::complex<double> casimir_reduced_fd(const JacobiForm& phi, std::complex<double> tau, std::complex<double> z, double h,
                                        std::int64_t radius = 40, long precision = 128);

/// phi -> combine_to_scalar(theta_decompose(phi)), weight k - 1/2 in the plus
/// space. Requires k even, m = 1 or prime, and c(D, r) = c(D, -r).
HarmonicExpansion thm2_map(const JacobiForm& phi);
/// Inverse composite: split at k - 1 (odd), then reconstruct.
JacobiForm thm2_inverse(const HarmonicExpansion& f, std::int64_t m);

}  // namespace weil
