// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance [--only N] [--seed S]
//
// Exit status is 0 when every criterion that ran passed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oracle.hpp"
#include "weil/corpus.hpp"
#include "weil/isomap.hpp"
#include "weil/jacobi.hpp"
#include "weil/numtheory.hpp"
#include "weil/weilrep.hpp"

using namespace weil;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> notes;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Exact rank over Q, independent of the Bareiss routine under test.
std::int64_t rational_rank(std::vector<std::vector<mpq_class>> a) {
  std::int64_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<std::int64_t>(a.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[static_cast<std::size_t>(rank)]);
    const auto& piv = a[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / piv[c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * piv[k];
    }
    ++rank;
  }
  return rank;
}

Outcome milgram() {
  Timer t;
  std::size_t bad = 0;
  for (std::int64_t m = 1; m <= 50; ++m)
    if (!milgram_check(DiscriminantForm(m, {2, 1}))) ++bad;
  const bool control_fails = !milgram_check(DiscriminantForm(5, {2, 2}));
  const double s = t.seconds();
  return {bad == 0 && control_fails && s < 10,
          "Milgram exact for m = 1..50 (" + std::to_string(bad) + " failures), (2,2) control " +
              (control_fails ? "fails" : "holds") + ", " + fmt("%.2f s", s)};
}

Outcome weil_structure() {
  Timer t;
  bool s4_identity = true, s4_minus = true, s8 = true, braid = true;
  for (std::int64_t m = 1; m <= 12; ++m)
    for (bool dual : {false, true}) {
      const DiscriminantForm df(m);
      const auto S = rho_S(df, dual).matrix, T = rho_T(df, dual).matrix;
      const auto S2 = S * S, S4 = S2 * S2, ST = S * T;
      s4_identity = s4_identity && S4.is_identity();
      s4_minus = s4_minus && (-S4).is_identity();
      s8 = s8 && (S4 * S4).is_identity();
      braid = braid && ST * ST * ST == S2;
    }
  const double s = t.seconds();
  Outcome out;
  out.pass = s4_identity && braid && s < 30;
  out.summary = std::string("rho(S)^4 = I ") + (s4_identity ? "holds" : "fails") + ", (rho(S)rho(T))^3 = rho(S)^2 " +
                (braid ? "holds" : "fails") + " for m <= 12, both representations, " + fmt("%.2f s", s);
  out.notes.push_back(std::string("rho(S)^4 = -I: ") + (s4_minus ? "holds" : "fails") + "; rho(S)^8 = I: " +
                      (s8 ? "holds" : "fails"));
  return out;
}

Outcome shintani() {
  bool closed = true, ones = true;
  for (std::int64_t m = 1; m <= 10; ++m) {
    const DiscriminantForm df(m);
    const auto v = all_ones(df);
    for (std::int64_t n = -5; n <= 5; ++n) {
      const auto g = mp_tilde({1, 0, n, 1});
      const auto w = rho_eval(df, g);
      closed = closed && w.matrix == shintani_unipotent(df, n).matrix;
      ones = ones && w.matrix.apply(v) == v;
    }
  }
  return {closed && ones, std::string("closed form ") + (closed ? "matches" : "differs") +
                              " for n in [-5, 5], m <= 10; all-ones fixed vector " + (ones ? "holds" : "fails")};
}

Outcome borcherds(std::mt19937_64& rng) {
  std::size_t total = 0, bad = 0, negative_a = 0;
  for (std::int64_t m : {1, 2, 3, 5, 7}) {
    const DiscriminantForm df(m);
    for (int i = 0; i < 50; ++i) {
      const IntMatrix2 g = corpus::gamma0_element(rng, m);
      if (g.a < 0) ++negative_a;
      ++total;
      if (!borcherds_eigencheck(df, g).holds) ++bad;
    }
  }
  return {bad == 0 && negative_a > 0, std::to_string(total) + " elements, " + std::to_string(negative_a) +
                                          " with a < 0, " + std::to_string(bad) + " failures"};
}

Outcome rank_protocol() {
  Timer t;
  Outcome out;
  bool ok = true;
  for (std::int64_t m : {1, 2, 3, 5, 7, 11, 13}) {
    const RankReport r = rank_lemma_check(m);
    std::vector<std::vector<mpq_class>> q;
    for (const auto& row : r.B) {
      q.emplace_back();
      for (const auto& x : row) q.back().emplace_back(x);
    }
    const bool rank_verified = rational_rank(q) == r.rank;
    // deviations recomputed entrywise from the character sums
    std::size_t expected_devs = 0;
    for (std::int64_t b = 0; b < 2 * m; ++b)
      for (std::int64_t g = 0; g < 2 * m; ++g)
        if (b_entry_bruteforce(m, b, g) != lemma_table_entry(m, b, g)) ++expected_devs;
    const bool surfaced = r.deviations.size() == expected_devs;
    ok = ok && r.product_matches_bruteforce && rank_verified && surfaced;
    std::ostringstream os;
    os << "m = " << m << ": rank " << r.rank << ", 2 phi(m) = " << r.expected_rank << " ("
       << (r.rank_matches ? "equal" : "differs") << "), leading columns "
       << (r.first_columns_independent ? "independent" : "dependent") << ", table deviations " << r.deviations.size();
    std::size_t minus = 0;
    for (const auto& d : r.deviations)
      if (nt::mod(d.beta + d.gamma, 2 * m) == 0) ++minus;
    os << " (" << minus << " at beta = -gamma)";
    out.notes.push_back(os.str());
  }
  const double s = t.seconds();
  out.pass = ok && s < 60;
  out.summary = std::string("exact ranks computed and cross-checked, deviations surfaced: ") + (ok ? "yes" : "no") + ", " +
                fmt("%.2f s", s);
  return out;
}

Outcome gauss() {
  std::size_t mismatches = 0;
  for (std::int64_t m : {1, 2, 3, 5, 7}) mismatches += gauss_sum_identity_check(m).mismatches;
  return {mismatches == 0, "AR closed form for m in {1,2,3,5,7}: " + std::to_string(mismatches) + " mismatching entries"};
}

Outcome roundtrip(std::mt19937_64& rng) {
  std::size_t total = 0, bad = 0;
  for (std::int64_t m : {1, 2, 3, 5})
    for (std::int64_t k : {0, 1})
      for (int i = 0; i < 50; ++i) {
        const auto f = corpus::plus_space_expansion(rng, m, k, 16, 48);
        const auto F = split_to_vector(f, m, k);
        const auto g = combine_to_scalar(F);
        ++total;
        if (!(g == f && split_to_vector(g, m, k) == F && verify_T_transform(F))) ++bad;
      }
  return {bad == 0, std::to_string(total) + " expansions, " + std::to_string(bad) + " failures"};
}

Outcome theta_transform() {
  Timer t;
  const auto theta = builtin_theta(400);
  const auto F = split_to_vector(theta, 1, 0);
  const auto rep = verify_S_transform(F, {cd(0, 1), cd(1.0 / 3, 1), cd(-0.5, 2)}, 1e-8);
  double fj = 0;
  bool fj_ok = true;
  for (std::int64_t j : {1, 3}) {
    const auto r = f_j_consistency_check(theta, 1, 0, j, {cd(0, 1)}, 1e-8);
    fj = std::max(fj, r.max_deviation);
    fj_ok = fj_ok && r.pass;
  }
  const double s = t.seconds();
  return {rep.pass && fj_ok && s < 10, "S transformation max deviation " + fmt("%.2e", rep.max_deviation) +
                                            ", f_j identity (j = 1, 3) max deviation " + fmt("%.2e", fj) + ", " +
                                            fmt("%.2f s", s)};
}

Outcome incomplete_gamma() {
  double worst = 0;
  for (int two_a : {-5, -3, -1, 1, 2, 3})
    for (double y : {0.1, 1.0, 10.0}) {
      const double ref = oracle::inc_gamma(two_a / 2.0, y);
      worst = std::max(worst, std::abs(inc_gamma(two_a, y) - ref) / std::abs(ref));
    }
  return {worst < 1e-12, "max relative error against quadrature " + fmt("%.2e", worst)};
}

Outcome harmonicity() {
  Outcome out;
  bool ok = true;
  const cd tau(0.15, 0.85);
  auto ratio_test = [&](const std::string& name, const std::function<cd(double)>& lap) {
    const double e1 = std::abs(lap(1e-2)), e2 = std::abs(lap(5e-3)), e3 = std::abs(lap(2.5e-3));
    const double r1 = e1 / e2, r2 = e2 / e3;
    const bool pass = r1 > 3.5 && r1 < 4.5 && r2 > 3.5 && r2 < 4.5;
    ok = ok && pass;
    out.notes.push_back(name + ": |Delta| = " + fmt("%.2e", e1) + ", " + fmt("%.2e", e2) + ", " + fmt("%.2e", e3) +
                        ", ratios " + fmt("%.2f", r1) + ", " + fmt("%.2f", r2));
  };
  for (int weight_num : {-1, 1, 3, 5}) {
    HarmonicExpansion plus(weight_num, 0, 3), minus(weight_num, -3, 0);
    plus.set_plus(mpq_class(3, 2), mpq_class(1));
    minus.set_minus(-1, mpq_class(1));
    ratio_test("c+ term, weight " + std::to_string(weight_num) + "/2",
               [&](double h) { return laplacian_fd(plus, tau, h); });
    ratio_test("c- term, weight " + std::to_string(weight_num) + "/2",
               [&](double h) { return laplacian_fd(minus, tau, h); });
  }
  // weight-1/2 non-holomorphic term measured with the weight-3/2 operator
  HarmonicExpansion wrong(1, -3, 0);
  wrong.set_minus(-1, mpq_class(1));
  const auto f = [&](cd t) { return eval_point(wrong, t).value; };
  const double probe = std::abs(laplacian_fd(f, 1.5, tau, 1e-3));
  out.notes.push_back("non-harmonic probe: |Delta| = " + fmt("%.3e", probe));
  out.pass = ok && probe > 1e-2;
  out.summary = std::string("second-order convergence on every term type ") + (ok ? "holds" : "fails") +
                ", probe " + fmt("%.2e", probe);
  return out;
}

Outcome jacobi_layer(std::mt19937_64& rng) {
  Outcome out;
  std::size_t bad_roundtrip = 0;
  for (int k : {1, 2, 3, 4})
    for (std::int64_t m = 1; m <= 5; ++m)
      for (int i = 0; i < 5; ++i) {
        const auto phi = corpus::jacobi_form(rng, k, m, -30, 20, k % 2 == 0);
        const auto h = theta_decompose(phi);
        if (!(reconstruct(h) == phi && theta_decompose(reconstruct(h)) == h)) ++bad_roundtrip;
      }
  std::size_t bad_heat = 0;
  for (std::int64_t m = 1; m <= 10; ++m)
    for (std::int64_t r = -25; r <= 25; ++r)
      if (!heat_operator_term_check(m, r).zero) ++bad_heat;

  const auto phi = corpus::jacobi_form(rng, 2, 3, -24, 12, true);
  bool display = true;
  for (auto [tau, z] : {std::pair{cd(0, 1), cd(0.1, 0.05)}, std::pair{cd(0.3, 0.9), cd(-0.2, 0.1)},
                        std::pair{cd(-0.45, 1.3), cd(0.35, -0.05)}}) {
    const auto a = eval_direct(phi, tau, z, 40), b = eval_decomposed(phi, tau, z, 40);
    const double dev = std::abs(a.value - b.value);
    display = display && dev <= a.bound + b.bound;
    out.notes.push_back("display at tau = " + fmt("%.2f", tau.real()) + fmt("%+.2fi", tau.imag()) + ": deviation " +
                        fmt("%.2e", dev) + ", combined bound " + fmt("%.2e", a.bound + b.bound));
  }

  JacobiForm harmonic(2, 1, 4, -4);
  harmonic.set_plus(-4, 0, mpq_class(1));
  harmonic.set_minus(4, 0, mpq_class(1));
  const cd tau(0, 1), z(0.1, 0.05);
  const double c_harm = std::abs(casimir_reduced_fd(harmonic, tau, z, 1e-3));
  const auto probe = [](cd t, cd zz) {
    return t.imag() * std::exp(cd(0, 2 * std::numbers::pi) * t) * theta_series_eval(1, 0, t, zz, 40).value;
  };
  const double c_probe = std::abs(casimir_reduced_fd(probe, 1.5, 1, tau, z, 1e-3));
  out.notes.push_back("Casimir: harmonic " + fmt("%.2e", c_harm) + ", probe " + fmt("%.2e", c_probe));

  out.pass = bad_roundtrip == 0 && bad_heat == 0 && display && c_harm < 1e-4 && c_probe >= 1e-4;
  out.summary = "round trip failures " + std::to_string(bad_roundtrip) + ", heat failures " + std::to_string(bad_heat) +
                ", display " + (display ? "within bounds" : "outside bounds") + ", Casimir harmonic " +
                fmt("%.1e", c_harm) + " / probe " + fmt("%.1e", c_probe);
  return out;
}

Outcome composite(std::mt19937_64& rng) {
  std::size_t total = 0, bad = 0;
  for (int k : {2, 4})
    for (std::int64_t m : {1, 2, 3, 5})
      for (int i = 0; i < 10; ++i) {
        const auto phi = corpus::jacobi_form(rng, k, m, -30, 20, true);
        const auto f = thm2_map(phi);
        ++total;
        if (!(plus_space_check(f, m, k - 1) && split_to_vector(f, m, k - 1) == theta_decompose(phi))) ++bad;
      }
  return {bad == 0, std::to_string(total) + " Jacobi forms, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::uint64_t seed = 20240611;
  app.add_option("--only", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Milgram formula", milgram},
      {"Weil representation relations", weil_structure},
      {"unipotent closed form and fixed vector", shintani},
      {"Gamma_0(4m) eigenvector identity", [&] { return borcherds(rng); }},
      {"rank of B = CA", rank_protocol},
      {"Gauss-sum identity for AR", gauss},
      {"split/combine round trip", [&] { return roundtrip(rng); }},
      {"theta transformation and f_j identity", theta_transform},
      {"incomplete Gamma", incomplete_gamma},
      {"harmonicity", harmonicity},
      {"Jacobi layer", [&] { return jacobi_layer(rng); }},
      {"Jacobi to plus-space composite", [&] { return composite(rng); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what(), {}};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.summary << '\n';
    for (const auto& n : o.notes) std::cout << "         " << n << '\n';
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
