#include "weil/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "weil/numtheory.hpp"

namespace weil {

namespace {

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // den is monic; exact division over Z.
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
  return quot;
}

std::vector<std::int64_t> compute_cyclotomic(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
  return num;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Reduces a length-N (exponents already folded) coefficient vector modulo Phi_N.
std::vector<mpq_class> reduce_folded(int order, std::vector<mpq_class> c) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;
  mpq_class t;
  for (std::size_t e = c.size(); e-- > deg;) {
    if (sgn(c[e]) == 0) continue;
    t = c[e];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) c[e - deg + j] -= t * phi[j];
  }
  c.resize(deg);
  return c;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  static std::map<int, std::unique_ptr<const std::vector<std::int64_t>>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<const std::vector<std::int64_t>>(order == 1 ? std::vector<std::int64_t>{-1, 1}
                                                                           : compute_cyclotomic(order));
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(order, std::move(poly));
  return *it->second;
}

int common_order(int a, int b) { return static_cast<int>(nt::lcm(a, b)); }

CyclotomicNumber::CyclotomicNumber() : order_(1), coeffs_(1) {}

CyclotomicNumber::CyclotomicNumber(const mpq_class& r, int order)
    : order_(order), coeffs_(static_cast<std::size_t>(nt::euler_phi(order))) {
  coeffs_[0] = r;
  coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(int order, std::vector<mpq_class> reduced)
    : order_(order), coeffs_(std::move(reduced)) {}

CyclotomicNumber CyclotomicNumber::from_powers(int order, std::vector<mpq_class> coefficients) {
  if (order < 1) throw std::invalid_argument("CyclotomicNumber: order must be positive");
  std::vector<mpq_class> folded(static_cast<std::size_t>(order));
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (sgn(coefficients[j]) == 0) continue;
    coefficients[j].canonicalize();
    folded[j % static_cast<std::size_t>(order)] += coefficients[j];
  }
  return CyclotomicNumber(order, reduce_folded(order, std::move(folded)));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::lift(int target_order) const {
  if (target_order == order_) return *this;
  if (target_order % order_ != 0) throw std::invalid_argument("lift: target order is not a multiple");
  const std::size_t step = static_cast<std::size_t>(target_order / order_);
  std::vector<mpq_class> folded(static_cast<std::size_t>(target_order));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) folded[j * step] = coeffs_[j];
  return CyclotomicNumber(target_order, reduce_folded(target_order, std::move(folded)));
}

CyclotomicNumber CyclotomicNumber::conj() const {
  const std::size_t n = static_cast<std::size_t>(order_);
  std::vector<mpq_class> folded(n);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) folded[(n - j) % n] = coeffs_[j];
  return CyclotomicNumber(order_, reduce_folded(order_, std::move(folded)));
}

CyclotomicNumber CyclotomicNumber::times_root(std::int64_t k) const {
  const std::size_t n = static_cast<std::size_t>(order_);
  const std::size_t shift = static_cast<std::size_t>(nt::mod(k, order_));
  std::vector<mpq_class> folded(n);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) folded[(j + shift) % n] = coeffs_[j];
  return CyclotomicNumber(order_, reduce_folded(order_, std::move(folded)));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  if (rhs.order_ != order_) {
    const int n = common_order(order_, rhs.order_);
    *this = lift(n);
    return *this += rhs.lift(n);
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) { return *this += -rhs; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  if (rhs.order_ != order_) {
    const int n = common_order(order_, rhs.order_);
    *this = lift(n);
    return *this *= rhs.lift(n);
  }
  const std::size_t n = static_cast<std::size_t>(order_);
  std::vector<mpq_class> folded(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      folded[(i + j) % n] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce_folded(order_, std::move(folded));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const mpq_class& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ != b.order_) {
    const int n = common_order(a.order_, b.order_);
    return a.lift(n).coeffs_ == b.lift(n).coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    sum += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) {
  bool first = true;
  for (std::size_t j = 0; j < x.coefficients().size(); ++j) {
    const auto& c = x.coefficients()[j];
    if (sgn(c) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (j > 0) os << "*z" << x.order() << "^" << j;
  }
  if (first) os << "0";
  return os;
}

CyclotomicNumber cyc_root_of_unity(std::int64_t p, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("cyc_root_of_unity: q must be positive");
  return CyclotomicNumber(mpq_class(1), static_cast<int>(q)).times_root(p);
}

CyclotomicNumber cyc_sqrt_nat(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("cyc_sqrt_nat: n must be positive");
  const auto [s, f] = nt::square_decompose(n);
  CyclotomicNumber result(mpq_class(static_cast<long>(s)));
  for (const auto& [p, e] : nt::factor(f)) {
    CyclotomicNumber root;
    if (p == 2) {
      root = cyc_root_of_unity(1, 8) + cyc_root_of_unity(-1, 8);
    } else {
      // Quadratic Gauss sum g_p = sum_x e(x^2 / p): sqrt(p) if p = 1 mod 4, i sqrt(p) if p = 3 mod 4.
      std::vector<mpq_class> powers(static_cast<std::size_t>(p));
      for (std::int64_t x = 0; x < p; ++x) powers[static_cast<std::size_t>(x * x % p)] += 1;
      root = CyclotomicNumber::from_powers(static_cast<int>(p), std::move(powers));
      if (p % 4 == 3) root *= cyc_root_of_unity(-1, 4);
    }
    if (root.to_complex().real() < 0) root = -root;
    result *= root;
  }
  return result;
}

MpfrComplex cyc_embed(const CyclotomicNumber& x, long precision) {
  if (precision < 53) throw std::invalid_argument("cyc_embed: precision must be at least 53 bits");
  MpfrComplex out{MpfrReal(precision), MpfrReal(precision)};
  if (x.is_zero()) return out;

  const auto& coeffs = x.coefficients();
  const long terms = static_cast<long>(coeffs.size());
  // Per component, each term is off by at most 30 * |c_j| * 2^-w (rounded c_j and
  // angle, correctly rounded cos/sin and product) and each running-sum addition
  // by at most sum |c_j| * 2^-w.
  for (long guard = 32;; guard *= 2) {
    const mpfr_prec_t w = precision + guard + 2 * static_cast<long>(std::log2(terms + 1.0));
    MpfrReal re(w), im(w), pi(w), angle(w), c(w), t(w), abs_sum(w);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (long j = 0; j < terms; ++j) {
      const auto& cj = coeffs[static_cast<std::size_t>(j)];
      if (sgn(cj) == 0) continue;
      mpfr_set_q(c.get(), cj.get_mpq_t(), MPFR_RNDN);
      mpfr_mul_si(angle.get(), pi.get(), 2 * j, MPFR_RNDN);
      mpfr_div_si(angle.get(), angle.get(), x.order(), MPFR_RNDN);
      mpfr_cos(t.get(), angle.get(), MPFR_RNDN);
      mpfr_mul(t.get(), t.get(), c.get(), MPFR_RNDN);
      mpfr_add(re.get(), re.get(), t.get(), MPFR_RNDN);
      mpfr_sin(t.get(), angle.get(), MPFR_RNDN);
      mpfr_mul(t.get(), t.get(), c.get(), MPFR_RNDN);
      mpfr_add(im.get(), im.get(), t.get(), MPFR_RNDN);
      mpfr_abs(t.get(), c.get(), MPFR_RNDU);
      mpfr_add(abs_sum.get(), abs_sum.get(), t.get(), MPFR_RNDU);
    }
    // Absolute error bound: abs_sum * (terms + 32) * 2^-w per component.
    MpfrReal bound(64), modulus(64);
    mpfr_mul_si(bound.get(), abs_sum.get(), terms + 32, MPFR_RNDU);
    mpfr_mul_2si(bound.get(), bound.get(), -w, MPFR_RNDU);
    mpfr_hypot(modulus.get(), re.get(), im.get(), MPFR_RNDD);
    // Require 2 * bound <= 2^(3 - precision) * (|value| - 2 * bound).
    MpfrReal lhs(64), rhs(64);
    mpfr_mul_2si(lhs.get(), bound.get(), 1, MPFR_RNDU);
    mpfr_sub(rhs.get(), modulus.get(), lhs.get(), MPFR_RNDD);
    mpfr_mul_2si(rhs.get(), rhs.get(), 3 - precision, MPFR_RNDD);
    if (mpfr_sgn(rhs.get()) > 0 && mpfr_lessequal_p(lhs.get(), rhs.get())) {
      mpfr_set(out.re.get(), re.get(), MPFR_RNDN);
      mpfr_set(out.im.get(), im.get(), MPFR_RNDN);
      return out;
    }
    if (guard > (1L << 20)) throw std::runtime_error("cyc_embed: precision loop did not converge");
  }
}

std::string MpfrReal::str(int digits) const {
  char* buf = nullptr;
  if (digits <= 0) digits = static_cast<int>(precision() * 0.30103) + 1;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace weil
