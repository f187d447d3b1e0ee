#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "weil/discform.hpp"

namespace weil {

/// A Fourier coefficient, stored exactly or as a float.
using Coeff = std::variant<mpq_class, double>;

bool is_zero(const Coeff& c);
double to_double(const Coeff& c);
/// Exact when both sides are exact, floating otherwise.
Coeff add(const Coeff& a, const Coeff& b);
Coeff scale(const Coeff& a, const mpq_class& s);
std::string to_string(const Coeff& c);

/// c+ and c- at one index; zero means absent.
struct CoeffPair {
  Coeff plus = mpq_class(0);
  Coeff minus = mpq_class(0);

  bool is_zero() const { return weil::is_zero(plus) && weil::is_zero(minus); }
  friend bool operator==(const CoeffPair&, const CoeffPair&) = default;
};

/// Thrown when a truncated sum cannot be certified to the requested accuracy.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-part Fourier expansion of weight weight_num / 2:
///
///   sum_n c+(n) e(n tau) + sum_{n<0} c-(n) Gamma(1 - weight, 4 pi |n| y) e(n tau).
///
/// Stored data is complete on [window_lo, window_hi]; there are no c+ terms
/// below window_lo.
class HarmonicExpansion {
 public:
  explicit HarmonicExpansion(int weight_num = 1, mpq_class lo = 0, mpq_class hi = 0);

  int weight_num() const { return weight_num_; }
  const mpq_class& window_lo() const { return lo_; }
  const mpq_class& window_hi() const { return hi_; }
  void set_window(const mpq_class& lo, const mpq_class& hi);

  /// Stores a coefficient, replacing any previous value. Throws
  /// std::invalid_argument when n lies outside the window or when a c- term
  /// is given at n >= 0.
  void set_plus(const mpq_class& n, const Coeff& c);
  void set_minus(const mpq_class& n, const Coeff& c);
  void set(const mpq_class& n, const CoeffPair& p);

  const std::map<mpq_class, CoeffPair>& coefficients() const { return coeffs_; }
  CoeffPair at(const mpq_class& n) const;

  bool is_zero() const;

  /// Same weight, window and nonzero coefficients.
  friend bool operator==(const HarmonicExpansion& a, const HarmonicExpansion& b);

 private:
  int weight_num_;
  mpq_class lo_, hi_;
  std::map<mpq_class, CoeffPair> coeffs_;
};

/// A vector-valued expansion sum_gamma F_gamma e_gamma for rho_L or its dual.
struct VectorForm {
  DiscriminantForm df;
  bool dual = false;
  std::vector<HarmonicExpansion> components;  // indexed by gamma in [0, 2m)

  VectorForm(const DiscriminantForm& d, bool is_dual, int weight_num, const mpq_class& lo = 0, const mpq_class& hi = 0);

  int weight_num() const { return components.front().weight_num(); }
  friend bool operator==(const VectorForm& a, const VectorForm& b);
};

/// Gamma(a, y) for half-integral a = two_a / 2 and y > 0, computed with MPFR
/// at the given working precision and rounded to double.
double inc_gamma(int two_a, double y, long precision = 128);

/// Every stored nonzero coefficient sits at an integer n with (-1)^k n a square mod 4m.
bool plus_space_check(const HarmonicExpansion& f, std::int64_t m, std::int64_t k);

struct EvalOptions {
  /// Largest admissible truncation bound; eval throws TruncationError above it.
  double accuracy = std::numeric_limits<double>::infinity();
  /// Assumed growth |c(n)| <= C max(1, |n|)^growth beyond the window; NaN
  /// selects the default weight_num + 1.
  double growth = std::numeric_limits<double>::quiet_NaN();
  long precision = 128;
};

struct ScalarValue {
  std::complex<double> value;
  double bound = 0;  // truncation bound
};

struct VectorValue {
  std::vector<std::complex<double>> value;
  double bound = 0;  // largest component bound
};

ScalarValue eval_point(const HarmonicExpansion& f, std::complex<double> tau, const EvalOptions& opt = {});
VectorValue eval_point(const VectorForm& f, std::complex<double> tau, const EvalOptions& opt = {});

/// Truncation bound alone: geometric tail of C nu^growth e^(-2 pi nu y) past both window ends.
double truncation_bound(const HarmonicExpansion& f, double y, double growth);

/// Central-difference approximation of
/// Delta_w = -y^2 (f_xx + f_yy) + i w y (f_x + i f_y) at tau, w = weight_num / 2.
std::complex<double> laplacian_fd(const HarmonicExpansion& f, std::complex<double> tau, double h, long precision = 128);
std::complex<double> laplacian_fd(const std::function<std::complex<double>(std::complex<double>)>& f, double weight,
                                  std::complex<double> tau, double h);

/// Component gamma supported on Z + Q(gamma) (Z - Q(gamma) for the dual).
bool verify_T_transform(const VectorForm& f);

struct PointRecord {
  std::size_t index = 0;
  std::complex<double> tau;
  double deviation = 0;
  double bound = 0;  // combined truncation bound of both sides
};

struct TransformReport {
  std::vector<PointRecord> points;  // in sample order
  double max_deviation = 0;
  double tolerance = 0;
  bool pass = false;
};

/// F(-1/tau) = tau^(weight) rho(S) F(tau) at every sample point; rho is the
/// dual when F is. Both sides must be certified to tolerance / 4.
TransformReport verify_S_transform(const VectorForm& f, const std::vector<std::complex<double>>& points, double tolerance,
                                   long precision = 128);

/// e(x) = exp(2 pi i x).
std::complex<double> e_of(double x);
/// tau^(two_w / 2) on the principal branch.
std::complex<double> principal_power(std::complex<double> tau, int two_w);

/// Parses "i", "2i", "0.3333+1i", "1/3+i", "-1/2+2i", "0.5".
std::complex<double> parse_point(std::string_view text);
/// Semicolon-separated list of points.
std::vector<std::complex<double>> parse_points(std::string_view text);

/// Parses "p/q" or an integer into a canonical rational.
mpq_class parse_rational(std::string_view text);
std::string format_rational(const mpq_class& q);

}  // namespace weil
