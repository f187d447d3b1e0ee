#include "weil/expansions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include <mpfr.h>

#include "weil/mpfr_real.hpp"
#include "weil/numtheory.hpp"
#include "weil/weilrep.hpp"

namespace weil {

// ---------------------------------------------------------------- coefficients

bool is_zero(const Coeff& c) {
  return std::visit([](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>) {
      return v == 0.0;
    } else {
      return sgn(v) == 0;
    }
  }, c);
}

double to_double(const Coeff& c) {
  if (const auto* q = std::get_if<mpq_class>(&c)) return q->get_d();
  return std::get<double>(c);
}

Coeff add(const Coeff& a, const Coeff& b) {
  const auto* qa = std::get_if<mpq_class>(&a);
  const auto* qb = std::get_if<mpq_class>(&b);
  if (qa && qb) return mpq_class(*qa + *qb);
  return to_double(a) + to_double(b);
}

Coeff scale(const Coeff& a, const mpq_class& s) {
  if (const auto* q = std::get_if<mpq_class>(&a)) return mpq_class(*q * s);
  return std::get<double>(a) * s.get_d();
}

std::string to_string(const Coeff& c) {
  if (const auto* q = std::get_if<mpq_class>(&c)) return format_rational(*q);
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(c);
  return os.str();
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// ---------------------------------------------------------------- expansions

HarmonicExpansion::HarmonicExpansion(int weight_num, mpq_class lo, mpq_class hi) : weight_num_(weight_num) {
  set_window(lo, hi);
}

void HarmonicExpansion::set_window(const mpq_class& lo, const mpq_class& hi) {
  if (lo > hi) throw std::invalid_argument("HarmonicExpansion: empty window");
  for (const auto& [n, p] : coeffs_)
    if (!p.is_zero() && (n < lo || n > hi)) throw std::invalid_argument("HarmonicExpansion: window excludes stored data");
  lo_ = lo;
  hi_ = hi;
}

void HarmonicExpansion::set_plus(const mpq_class& n, const Coeff& c) {
  CoeffPair p = at(n);
  p.plus = c;
  set(n, p);
}

void HarmonicExpansion::set_minus(const mpq_class& n, const Coeff& c) {
  CoeffPair p = at(n);
  p.minus = c;
  set(n, p);
}

void HarmonicExpansion::set(const mpq_class& n, const CoeffPair& p) {
  if (!weil::is_zero(p.minus) && sgn(n) >= 0)
    throw std::invalid_argument("HarmonicExpansion: c- is only defined for negative indices");
  if (p.is_zero()) {
    coeffs_.erase(n);
    return;
  }
  if (n < lo_ || n > hi_) throw std::invalid_argument("HarmonicExpansion: index " + format_rational(n) + " outside window");
  coeffs_[n] = p;
}

CoeffPair HarmonicExpansion::at(const mpq_class& n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? CoeffPair{} : it->second;
}

bool HarmonicExpansion::is_zero() const { return coeffs_.empty(); }

bool operator==(const HarmonicExpansion& a, const HarmonicExpansion& b) {
  return a.weight_num_ == b.weight_num_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.coeffs_ == b.coeffs_;
}

VectorForm::VectorForm(const DiscriminantForm& d, bool is_dual, int weight_num, const mpq_class& lo, const mpq_class& hi)
    : df(d), dual(is_dual), components(static_cast<std::size_t>(d.group_order()), HarmonicExpansion(weight_num, lo, hi)) {}

bool operator==(const VectorForm& a, const VectorForm& b) {
  return a.df.index() == b.df.index() && a.df.signature() == b.df.signature() && a.dual == b.dual &&
         a.components == b.components;
}

// ---------------------------------------------------------------- incomplete Gamma

double inc_gamma(int two_a, double y, long precision) {
  if (!(y > 0) || !std::isfinite(y)) throw std::invalid_argument("inc_gamma: y must be positive");
  if (precision < 53) throw std::invalid_argument("inc_gamma: precision must be at least 53 bits");
  const bool half = (two_a % 2) != 0;
  const int steps = std::abs(two_a) / 2 + 1;
  // The downward recurrence cancels about log2(y) bits per step.
  const long wp = precision + 32 + steps * (static_cast<long>(std::ceil(std::log2(2.0 + y))) + 4);

  MpfrReal Y(wp), g(wp), term(wp), a(wp), emy(wp);
  mpfr_set_d(Y.get(), y, MPFR_RNDN);
  mpfr_neg(emy.get(), Y.get(), MPFR_RNDN);
  mpfr_exp(emy.get(), emy.get(), MPFR_RNDN);

  int cur;  // twice the current a
  if (half) {
    MpfrReal root(wp), pi(wp);
    mpfr_sqrt(root.get(), Y.get(), MPFR_RNDN);
    mpfr_erfc(g.get(), root.get(), MPFR_RNDN);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_sqrt(pi.get(), pi.get(), MPFR_RNDN);
    mpfr_mul(g.get(), g.get(), pi.get(), MPFR_RNDN);
    cur = 1;
  } else if (two_a >= 2) {
    mpfr_set(g.get(), emy.get(), MPFR_RNDN);
    cur = 2;
  } else {
    // Gamma(0, y) = E1(y) = -Ei(-y)
    mpfr_neg(g.get(), Y.get(), MPFR_RNDN);
    mpfr_eint(g.get(), g.get(), MPFR_RNDN);
    mpfr_neg(g.get(), g.get(), MPFR_RNDN);
    cur = 0;
  }

  auto power_term = [&](int two_s) {
    // y^s e^-y with s = two_s / 2
    mpfr_set_si(a.get(), two_s, MPFR_RNDN);
    mpfr_div_2ui(a.get(), a.get(), 1, MPFR_RNDN);
    mpfr_pow(term.get(), Y.get(), a.get(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), emy.get(), MPFR_RNDN);
  };

  while (cur < two_a) {
    // Gamma(a + 1, y) = a Gamma(a, y) + y^a e^-y
    power_term(cur);
    mpfr_mul(g.get(), g.get(), a.get(), MPFR_RNDN);
    mpfr_add(g.get(), g.get(), term.get(), MPFR_RNDN);
    cur += 2;
  }
  while (cur > two_a) {
    // Gamma(a, y) = (Gamma(a + 1, y) - y^a e^-y) / a
    power_term(cur - 2);
    mpfr_sub(g.get(), g.get(), term.get(), MPFR_RNDN);
    mpfr_div(g.get(), g.get(), a.get(), MPFR_RNDN);
    cur -= 2;
  }
  return g.to_double();
}

// ---------------------------------------------------------------- plus space

bool plus_space_check(const HarmonicExpansion& f, std::int64_t m, std::int64_t k) {
  for (const auto& [n, p] : f.coefficients()) {
    if (p.is_zero()) continue;
    if (n.get_den() != 1 || !n.get_num().fits_slong_p()) return false;
    if (!in_plus_space(n.get_num().get_si(), m, k)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- evaluation

std::complex<double> e_of(double x) {
  const double t = 2 * std::numbers::pi * x;
  return {std::cos(t), std::sin(t)};
}

std::complex<double> principal_power(std::complex<double> tau, int two_w) {
  return std::exp(0.5 * static_cast<double>(two_w) * std::log(tau));
}

namespace {

// log of sup over nu in [p, q] of max(1, |nu|)^g e^(-a nu).
double log_sup(double p, double q, double g, double a) {
  auto f = [&](double nu) { return g * std::log(std::max(1.0, std::abs(nu))) - a * nu; };
  double best = std::max(f(p), f(q));
  for (double c : {-1.0, 1.0, a > 0 ? g / a : p})
    if (c > p && c < q) best = std::max(best, f(c));
  return best;
}

// Sum over the unit intervals [start + j, start + j + 1), each holding at most one
// support point, of C max(1, |nu|)^g e^(-a nu).
double tail_sum(double start, double g, double a, double log_c) {
  if (!std::isfinite(log_c)) return 0;
  double total = 0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (long j = 0; j < 10'000'000; ++j) {
    const double u = start + static_cast<double>(j);
    const double lt = log_c + log_sup(u, u + 1, g, a);
    const double t = std::exp(lt);
    if (!std::isfinite(t)) return std::numeric_limits<double>::infinity();
    total += t;
    if (u >= 1 && u >= (a > 0 ? g / a : 0)) {
      // Decreasing from here on: consecutive sups shrink by at most r.
      const double log_r = g * std::log((u + 2) / (u + 1)) - a;
      if (log_r < -1e-3 && std::isfinite(prev)) {
        const double r = std::exp(log_r);
        return total + t * r / (1 - r);
      }
    }
    prev = t;
  }
  return std::numeric_limits<double>::infinity();
}

double lattice_step(const HarmonicExpansion& f) {
  mpz_class den = 1;
  auto absorb = [&den](const mpq_class& q) { mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t()); };
  absorb(f.window_lo());
  absorb(f.window_hi());
  for (const auto& kv : f.coefficients()) absorb(kv.first);
  return 1.0 / den.get_d();
}

}  // namespace

double truncation_bound(const HarmonicExpansion& f, double y, double growth) {
  if (!(y > 0)) throw std::invalid_argument("truncation_bound: Im tau must be positive");
  if (std::isnan(growth)) growth = f.weight_num() + 1.0;
  double log_cp = -std::numeric_limits<double>::infinity();
  double log_cm = log_cp;
  for (const auto& [n, p] : f.coefficients()) {
    const double lw = growth * std::log(std::max(1.0, std::abs(n.get_d())));
    if (!is_zero(p.plus)) log_cp = std::max(log_cp, std::log(std::abs(to_double(p.plus))) - lw);
    if (!is_zero(p.minus)) log_cm = std::max(log_cm, std::log(std::abs(to_double(p.minus))) - lw);
  }
  const double a = 2 * std::numbers::pi * y;
  const double step = lattice_step(f);
  double bound = tail_sum(f.window_hi().get_d() + step, growth, a, log_cp);

  // Missing c- terms below the window. With s = 1 - weight and x = 4 pi |nu| y,
  // Gamma(s, x) <= x^(s-1) e^-x for s <= 1 and <= 2 x^(s-1) e^-x once x >= 2(s-1);
  // each term is then at most C K (4 pi y)^(s-1) |nu|^(g+s-1) e^(-2 pi |nu| y).
  if (std::isfinite(log_cm)) {
    const double s = 1.0 - 0.5 * f.weight_num();
    const double u0 = -(std::min(f.window_lo().get_d(), 0.0) - step);
    const double x0 = 4 * std::numbers::pi * u0 * y;
    if (s > 1 && x0 < 2 * (s - 1)) return std::numeric_limits<double>::infinity();
    const double log_k = (s > 1 ? std::log(2.0) : 0.0) + (s - 1) * std::log(4 * std::numbers::pi * y);
    const double gl = growth + s - 1;
    // max(1, u)^gl over-estimates u^gl for u >= 1; below 1 the factor u^gl is at most u0^gl.
    const double extra = (u0 < 1 && gl < 0) ? gl * std::log(u0) : 0.0;
    bound += tail_sum(u0, gl, a, log_cm + log_k + extra);
  }
  return bound;
}

namespace {

std::complex<double> raw_sum(const HarmonicExpansion& f, std::complex<double> tau, long precision) {
  const double x = tau.real(), y = tau.imag();
  const int two_s = 2 - f.weight_num();
  std::complex<double> sum = 0;
  for (const auto& [n, p] : f.coefficients()) {
    const double nu = n.get_d();
    const std::complex<double> q = std::exp(-2 * std::numbers::pi * nu * y) * e_of(nu * x);
    double c = is_zero(p.plus) ? 0.0 : to_double(p.plus);
    if (!is_zero(p.minus)) c += to_double(p.minus) * inc_gamma(two_s, 4 * std::numbers::pi * std::abs(nu) * y, precision);
    sum += c * q;
  }
  return sum;
}

}  // namespace

ScalarValue eval_point(const HarmonicExpansion& f, std::complex<double> tau, const EvalOptions& opt) {
  if (!(tau.imag() > 0)) throw std::invalid_argument("eval_point: Im tau must be positive");
  ScalarValue out;
  out.bound = truncation_bound(f, tau.imag(), opt.growth);
  if (!(out.bound <= opt.accuracy))
    throw TruncationError("eval_point: truncation bound " + std::to_string(out.bound) + " exceeds accuracy " +
                          std::to_string(opt.accuracy));
  out.value = raw_sum(f, tau, opt.precision);
  return out;
}

VectorValue eval_point(const VectorForm& f, std::complex<double> tau, const EvalOptions& opt) {
  VectorValue out;
  out.value.reserve(f.components.size());
  for (const auto& c : f.components) {
    const ScalarValue v = eval_point(c, tau, opt);
    out.value.push_back(v.value);
    out.bound = std::max(out.bound, v.bound);
  }
  return out;
}

std::complex<double> laplacian_fd(const std::function<std::complex<double>(std::complex<double>)>& f, double weight,
                                  std::complex<double> tau, double h) {
  if (!(h > 0)) throw std::invalid_argument("laplacian_fd: step must be positive");
  if (!(tau.imag() > 2 * h)) throw std::invalid_argument("laplacian_fd: stencil leaves the upper half plane");
  const std::complex<double> dx(h, 0), dy(0, h);
  const auto f0 = f(tau);
  const auto fxp = f(tau + dx), fxm = f(tau - dx), fyp = f(tau + dy), fym = f(tau - dy);
  const auto fxx = (fxp - 2.0 * f0 + fxm) / (h * h);
  const auto fyy = (fyp - 2.0 * f0 + fym) / (h * h);
  const auto fx = (fxp - fxm) / (2 * h);
  const auto fy = (fyp - fym) / (2 * h);
  const double y = tau.imag();
  const std::complex<double> i(0, 1);
  return -y * y * (fxx + fyy) + i * weight * y * (fx + i * fy);
}

std::complex<double> laplacian_fd(const HarmonicExpansion& f, std::complex<double> tau, double h, long precision) {
  return laplacian_fd([&](std::complex<double> t) { return raw_sum(f, t, precision); }, 0.5 * f.weight_num(), tau, h);
}

// ---------------------------------------------------------------- transformation checks

bool verify_T_transform(const VectorForm& f) {
  const std::int64_t level = f.df.level();
  for (std::int64_t g = 0; g < f.df.group_order(); ++g) {
    const std::int64_t q = f.df.q_numerator(g);
    for (const auto& [n, p] : f.components[static_cast<std::size_t>(g)].coefficients()) {
      if (p.is_zero()) continue;
      // level * n must be an integer congruent to +-q mod level
      mpq_class scaled = n * level;
      if (scaled.get_den() != 1) return false;
      mpz_class r = scaled.get_num() - (f.dual ? -q : q);
      if (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(level)) == 0) return false;
    }
  }
  return true;
}

TransformReport verify_S_transform(const VectorForm& f, const std::vector<std::complex<double>>& points, double tolerance,
                                   long precision) {
  const auto rho = rho_S(f.df, f.dual).matrix.to_complex();
  const std::size_t n = f.components.size();
  EvalOptions opt;
  opt.accuracy = tolerance / 4;
  opt.precision = precision;

  TransformReport report;
  report.tolerance = tolerance;
  report.points.resize(points.size());
  std::vector<std::string> errors(points.size());

#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(points.size()); ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx);
    const std::complex<double> tau = points[i];
    try {
      const VectorValue lhs = eval_point(f, -1.0 / tau, opt);
      const VectorValue rhs_f = eval_point(f, tau, opt);
      const std::complex<double> factor = principal_power(tau, f.weight_num());
      double dev = 0;
      for (std::size_t d = 0; d < n; ++d) {
        std::complex<double> acc = 0;
        for (std::size_t g = 0; g < n; ++g) acc += rho[d * n + g] * rhs_f.value[g];
        dev = std::max(dev, std::abs(lhs.value[d] - factor * acc));
      }
      report.points[i] = {i, tau, dev, lhs.bound + std::abs(factor) * std::sqrt(static_cast<double>(n)) * rhs_f.bound};
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw TruncationError(e);
  for (const auto& p : report.points) report.max_deviation = std::max(report.max_deviation, p.deviation);
  report.pass = report.max_deviation < tolerance;
  return report;
}

// ---------------------------------------------------------------- point parsing

namespace {

double parse_real(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.find('/') != std::string_view::npos) return parse_rational(s).get_d();
  std::size_t used = 0;
  const std::string str(s);
  const double v = std::stod(str, &used);
  if (used != str.size()) throw std::invalid_argument("malformed number '" + str + "'");
  return v;
}

}  // namespace

std::complex<double> parse_point(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("parse_point: empty point");
  // "...i/d" divides the imaginary part by d
  if (const auto slash = s.rfind("i/"); slash != std::string::npos && s.find('i', slash + 1) == std::string::npos) {
    const auto head = parse_point(s.substr(0, slash + 1));
    double den = 0;
    try {
      den = parse_real(std::string_view(s).substr(slash + 2));
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_point: cannot parse '" + std::string(text) + "'");
    }
    if (den == 0) throw std::invalid_argument("parse_point: zero denominator in '" + std::string(text) + "'");
    return {head.real(), head.imag() / den};
  }
  try {
    if (s.back() != 'i') return {parse_real(s), 0.0};
    s.pop_back();
    // split at the last sign that is not a leading sign or an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    const std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+") im += "1";
    if (im == "-") im += "1";
    return {re.empty() ? 0.0 : parse_real(re), parse_real(im[0] == '+' ? std::string_view(im).substr(1) : im)};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_point: cannot parse '" + std::string(text) + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("parse_point: out of range '" + std::string(text) + "'");
  }
}

std::vector<std::complex<double>> parse_points(std::string_view text) {
  std::vector<std::complex<double>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const auto piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(parse_point(piece));
    start = end + 1;
  }
  if (out.empty()) throw std::invalid_argument("parse_points: no points given");
  return out;
}

}  // namespace weil
