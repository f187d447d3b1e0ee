#include "weil/isomap.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "weil/numtheory.hpp"
#include "weil/weilrep.hpp"

namespace weil {

namespace {

void require_supported_m(std::int64_t m, bool allow_any) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (!allow_any && m != 1 && !nt::is_prime(m))
    throw std::invalid_argument("m = " + std::to_string(m) + " is neither 1 nor prime (pass the override to allow it)");
}

CoeffPair scaled(const CoeffPair& p, const mpq_class& s) { return {scale(p.plus, s), scale(p.minus, s)}; }

CoeffPair sum(const CoeffPair& a, const CoeffPair& b) { return {add(a.plus, b.plus), add(a.minus, b.minus)}; }

}  // namespace

VectorForm split_to_vector(const HarmonicExpansion& f, std::int64_t m, std::int64_t k, const SplitOptions& opt) {
  require_supported_m(m, opt.allow_any_m);
  if (f.weight_num() != 2 * k + 1)
    throw std::invalid_argument("split_to_vector: weight " + std::to_string(f.weight_num()) + "/2 does not match k = " +
                                std::to_string(k));
  if (!plus_space_check(f, m, k)) throw std::invalid_argument("split_to_vector: input is not in the plus space");

  const DiscriminantForm df(m);
  const std::int64_t level = df.level();
  const bool odd = nt::mod(k, 2) == 1;
  const mpq_class inv_level(1, static_cast<unsigned long>(level));
  VectorForm out(df, odd, f.weight_num(), f.window_lo() * inv_level, f.window_hi() * inv_level);

  for (const auto& [n, p] : f.coefficients()) {
    const std::int64_t target = nt::mod(odd ? -n.get_num().get_si() : n.get_num().get_si(), level);
    const mpq_class index = n * inv_level;
    for (std::int64_t g = 0; g < df.group_order(); ++g) {
      if (df.q_numerator(g) != target) continue;
      out.components[static_cast<std::size_t>(g)].set(index, scaled(p, mpq_class(1, s_factor(df, g))));
    }
  }
  return out;
}

HarmonicExpansion combine_to_scalar(const VectorForm& F) {
  if (F.weight_num() % 2 == 0) throw std::invalid_argument("combine_to_scalar: weight must be half-integral");
  const std::int64_t k = (F.weight_num() - 1) / 2;
  if ((nt::mod(k, 2) == 1) != F.dual)
    throw std::invalid_argument("combine_to_scalar: weight parity does not match the representation type");
  if (!verify_T_transform(F)) throw std::invalid_argument("combine_to_scalar: component support violates rho(T)");

  const std::int64_t level = F.df.level();
  mpq_class lo = F.components.front().window_lo() * level;
  mpq_class hi = F.components.front().window_hi() * level;
  std::map<mpq_class, CoeffPair> acc;
  for (const auto& c : F.components) {
    lo = std::min(lo, mpq_class(c.window_lo() * level));
    hi = std::max(hi, mpq_class(c.window_hi() * level));
    for (const auto& [nu, p] : c.coefficients()) {
      const mpq_class n = nu * level;
      auto it = acc.find(n);
      if (it == acc.end()) {
        acc.emplace(n, p);
      } else {
        it->second = sum(it->second, p);
      }
    }
  }
  HarmonicExpansion f(F.weight_num(), lo, hi);
  for (const auto& [n, p] : acc) f.set(n, p);
  if (!plus_space_check(f, F.df.index(), k)) throw std::logic_error("combine_to_scalar: result left the plus space");
  return f;
}

// ---------------------------------------------------------------- proof matrices

ProofMatrices build_proof_matrices(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("build_proof_matrices: m must be positive");
  const DiscriminantForm df(m);
  const std::int64_t level = df.level();
  const int order = df.working_order();
  ProofMatrices out;
  out.m = m;
  out.j = nt::units_mod(level);
  const std::size_t rows = out.j.size(), n = static_cast<std::size_t>(df.group_order());
  out.A = CycloMatrix(rows, n, order);
  out.C = CycloMatrix(n, rows, order);
  for (std::size_t l = 0; l < rows; ++l) {
    for (std::size_t g = 0; g < n; ++g) {
      const std::int64_t gg = static_cast<std::int64_t>(g);
      out.A.set(l, g, cyc_root_of_unity(out.j[l] * gg * gg % level, level));
      out.C.set(g, l, cyc_root_of_unity(-(out.j[l] * gg * gg % level), level));
    }
  }
  out.R = rho_S(df).matrix;
  out.B = out.C * out.A;
  return out;
}

std::int64_t integer_rank(std::vector<std::vector<mpz_class>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

std::int64_t lemma_table_entry(std::int64_t m, std::int64_t beta, std::int64_t gamma) {
  const std::int64_t b = nt::mod(beta, 2 * m), g = nt::mod(gamma, 2 * m);
  if (b == g) return 2 * nt::euler_phi(m);
  if ((b - g) % 2 == 0) return -2;
  return 0;
}

std::int64_t b_entry_bruteforce(std::int64_t m, std::int64_t beta, std::int64_t gamma) {
  if (m < 1) throw std::invalid_argument("b_entry_bruteforce: m must be positive");
  const std::int64_t level = 4 * m;
  const std::int64_t b = nt::mod(beta, 2 * m), g = nt::mod(gamma, 2 * m);
  const std::int64_t diff = nt::mod(g * g - b * b, level);
  std::vector<mpq_class> powers(static_cast<std::size_t>(level));
  for (std::int64_t j : nt::units_mod(level)) powers[static_cast<std::size_t>(j * diff % level)] += 1;
  const CyclotomicNumber s = CyclotomicNumber::from_powers(static_cast<int>(level), std::move(powers));
  if (!s.is_rational() || s.rational_part().get_den() != 1)
    throw std::logic_error("b_entry_bruteforce: character sum is not a rational integer");
  return s.rational_part().get_num().get_si();
}

RankReport rank_lemma_check(std::int64_t m, bool allow_any_m) {
  require_supported_m(m, allow_any_m);
  const ProofMatrices pm = build_proof_matrices(m);
  const std::size_t n = pm.B.rows();
  RankReport out;
  out.m = m;
  out.expected_rank = 2 * nt::euler_phi(m);
  out.B.assign(n, std::vector<mpz_class>(n));
  out.product_matches_bruteforce = true;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t g = 0; g < n; ++g) {
      const CyclotomicNumber& x = pm.B(b, g);
      if (!x.is_rational() || x.rational_part().get_den() != 1)
        throw std::logic_error("rank_lemma_check: B has a non-integer entry");
      out.B[b][g] = x.rational_part().get_num();
      const auto bi = static_cast<std::int64_t>(b), gi = static_cast<std::int64_t>(g);
      const std::int64_t brute = b_entry_bruteforce(m, bi, gi);
      if (out.B[b][g] != brute) out.product_matches_bruteforce = false;
      const std::int64_t table = lemma_table_entry(m, bi, gi);
      if (brute != table) out.deviations.push_back({bi, gi, brute, table});
    }
  }
  out.rank = integer_rank(out.B);
  out.rank_matches = out.rank == out.expected_rank;
  std::vector<std::vector<mpz_class>> leading(n, std::vector<mpz_class>(static_cast<std::size_t>(out.expected_rank)));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t g = 0; g < leading[b].size(); ++g) leading[b][g] = out.B[b][g];
  out.leading_rank = integer_rank(leading);
  out.first_columns_independent = out.leading_rank == out.expected_rank;
  return out;
}

GaussReport gauss_sum_identity_check(std::int64_t m) {
  const ProofMatrices pm = build_proof_matrices(m);
  const std::int64_t level = 4 * m;
  GaussReport out;
  out.AR = pm.A * pm.R;
  out.closed_form = CycloMatrix(pm.A.rows(), pm.A.cols(), out.AR.order());
  for (std::size_t l = 0; l < pm.j.size(); ++l) {
    const std::int64_t j = pm.j[l];
    const std::int64_t jinv = nt::inverse_mod(j, level);
    const CyclotomicNumber front = epsilon_inverse(j) * mpq_class(nt::kronecker(level, j));
    for (std::size_t g = 0; g < pm.A.cols(); ++g) {
      const auto gg = static_cast<std::int64_t>(g);
      out.closed_form.set(l, g, front * cyc_root_of_unity(-(jinv * gg % level * gg % level), level));
      if (!(out.closed_form(l, g) == out.AR(l, g))) ++out.mismatches;
    }
  }
  out.holds = out.mismatches == 0;
  return out;
}

CyclotomicNumber fj_constant(std::int64_t m, std::int64_t j, bool dual) {
  const std::int64_t level = 4 * m;
  if (nt::gcd(j, level) != 1) throw std::invalid_argument("fj_constant: j must be prime to 4m");
  const std::int64_t jj = nt::mod(dual ? -j : j, level);
  const CyclotomicNumber c = epsilon_inverse(jj) * mpq_class(nt::kronecker(level, jj));
  return dual ? c.conj() : c;
}

FjReport fj_identity_check(const VectorForm& F, std::int64_t j, const std::vector<std::complex<double>>& points,
                           double tolerance, long precision) {
  const std::int64_t m = F.df.index(), level = F.df.level();
  if (nt::gcd(j, level) != 1) throw std::invalid_argument("fj-check: j must be prime to 4m");
  const std::int64_t jinv = nt::inverse_mod(nt::mod(j, level), level);
  const std::size_t n = F.components.size();
  std::vector<std::complex<double>> a(n), b(n);
  for (std::size_t g = 0; g < n; ++g) {
    const auto q = static_cast<double>(F.df.q_numerator(static_cast<std::int64_t>(g)));
    a[g] = e_of(static_cast<double>(nt::mod(j, level)) * q / static_cast<double>(level));
    b[g] = e_of(-static_cast<double>(jinv) * q / static_cast<double>(level));
  }
  const std::complex<double> c = fj_constant(m, j, F.dual).to_complex();
  EvalOptions opt;
  opt.accuracy = tolerance / 4;
  opt.precision = precision;

  FjReport report;
  report.j = j;
  report.tolerance = tolerance;
  report.points.resize(points.size());
  std::vector<std::string> errors(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(points.size()); ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx);
    const std::complex<double> tau = points[i];
    try {
      const VectorValue at_s = eval_point(F, -1.0 / tau, opt);
      const VectorValue at_t = eval_point(F, tau, opt);
      std::complex<double> lhs = 0, rhs = 0;
      for (std::size_t g = 0; g < n; ++g) {
        lhs += a[g] * at_s.value[g];
        rhs += b[g] * at_t.value[g];
      }
      const std::complex<double> factor = c * principal_power(tau, F.weight_num());
      rhs *= factor;
      const double nn = static_cast<double>(n);
      report.points[i] = {i, tau, std::abs(lhs - rhs), nn * at_s.bound + std::abs(factor) * nn * at_t.bound};
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

FjReport f_j_consistency_check(const HarmonicExpansion& f, std::int64_t m, std::int64_t k, std::int64_t j,
                               const std::vector<std::complex<double>>& points, double tolerance, long precision) {
  return fj_identity_check(split_to_vector(f, m, k), j, points, tolerance, precision);
}

HarmonicExpansion builtin_theta(std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("builtin_theta: window must be non-negative");
  HarmonicExpansion f(1, 0, mpq_class(static_cast<long>(n_max)));
  f.set_plus(0, mpq_class(1));
  for (std::int64_t x = 1; x * x <= n_max; ++x) f.set_plus(mpq_class(static_cast<long>(x * x)), mpq_class(2));
  return f;
}

}  // namespace weil
