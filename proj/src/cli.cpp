#include "weil/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "weil/corpus.hpp"
#include "weil/expansions.hpp"
#include "weil/io.hpp"
#include "weil/isomap.hpp"
#include "weil/jacobi.hpp"
#include "weil/numtheory.hpp"
#include "weil/report.hpp"
#include "weil/weilrep.hpp"

namespace weil::cli {

namespace {

using io::Json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

long precision_from_env() {
  const char* v = std::getenv("WEIL_PRECISION_BITS");
  if (v == nullptr || *v == '\0') return 128;
  char* end = nullptr;
  const long bits = std::strtol(v, &end, 10);
  if (*end != '\0' || bits < 53 || bits > 100000) throw UsageError("WEIL_PRECISION_BITS must be an integer >= 53");
  return bits;
}

Signature parse_signature(const std::string& s) {
  Signature sig;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> sig.plus >> comma >> sig.minus) || comma != ',' || sig.plus < 0 || sig.minus < 0)
    throw UsageError("signature must be given as b+,b-");
  return sig;
}

IntMatrix2 parse_matrix(const std::string& s) {
  IntMatrix2 m;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(s);
  if (!(in >> m.a >> c1 >> m.b >> c2 >> m.c >> c3 >> m.d) || c1 != ',' || c2 != ',' || c3 != ',')
    throw UsageError("matrix must be given as a,b,c,d");
  return m;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const CycloMatrix& m) {
  Json exact = Json::array(), approx = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json er = Json::array(), ar = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      er.push_back(io::to_json(m(r, c)));
      ar.push_back(complex_json(m(r, c).to_complex()));
    }
    exact.push_back(std::move(er));
    approx.push_back(std::move(ar));
  }
  return Json{{"exact", exact}, {"complex", approx}};
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string fmt(std::complex<double> z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// Scalar input: a file or the built-in theta series.
struct ScalarInput {
  HarmonicExpansion f;
  std::int64_t m = 1;
  std::int64_t k = 0;
};

ScalarInput load_scalar(const std::string& in, const std::string& builtin, std::int64_t window) {
  if (!builtin.empty()) {
    if (builtin != "theta") throw UsageError("unknown built-in '" + builtin + "' (available: theta)");
    return {builtin_theta(window), 1, 0};
  }
  if (in.empty()) throw UsageError("give --in FILE or --builtin theta");
  io::Container c = io::container_from_json(io::read_file(in));
  if (!c.scalar) throw UsageError(in + " does not hold a scalar expansion");
  return {std::move(*c.scalar), c.m, c.k};
}

VectorForm load_vector(const std::string& in, const std::string& builtin, std::int64_t window) {
  if (!builtin.empty()) {
    const ScalarInput s = load_scalar("", builtin, window);
    return split_to_vector(s.f, s.m, s.k);
  }
  if (in.empty()) throw UsageError("give --in FILE or --builtin theta");
  io::Container c = io::container_from_json(io::read_file(in));
  if (c.vector) return std::move(*c.vector);
  return split_to_vector(*c.scalar, c.m, c.k, {true});
}

JacobiForm builtin_jacobi(const std::string& name) {
  if (name == "harmonic") {
    // h_0 = q + Gamma(-1/2, 4 pi y) q^-1 at m = 1, k = 2.
    JacobiForm phi(2, 1, 4, -4);
    phi.set_plus(-4, 0, mpq_class(1));
    phi.set_minus(4, 0, mpq_class(1));
    return phi;
  }
  throw UsageError("unknown built-in '" + name + "' (available: harmonic, probe)");
}

void write_or_embed(Report& rep, const std::string& out, const Json& payload) {
  if (out.empty()) {
    rep.data["output"] = payload;
  } else {
    io::write_file(out, payload);
    rep.params["out"] = out;
  }
}

struct Globals {
  std::string json_path;
  std::uint64_t seed = 20240611;
  long precision = 128;
};

// ---------------------------------------------------------------- subcommands

Report cmd_rho(std::int64_t m, const std::string& sig, const std::string& word, const std::string& matrix, int sign,
               bool dual) {
  Report rep;
  rep.command = "rho";
  const DiscriminantForm df(m, parse_signature(sig));
  rep.params = {{"m", m}, {"sig", sig}, {"dual", dual}};
  WeilMatrix w;
  if (!matrix.empty()) {
    const MpElement g(parse_matrix(matrix), sign);
    const Word decomposition = mp_decompose(g);
    rep.params["matrix"] = matrix;
    rep.params["sign"] = sign;
    rep.data["word"] = format_word(decomposition);
    rep.exact("word reproduces the element", word_product(decomposition) == g);
    w = rho_word(df, decomposition, dual);
  } else {
    rep.params["word"] = word;
    w = rho_word(df, parse_word(word), dual);
  }
  rep.data["matrix"] = matrix_json(w.matrix);
  rep.exact("unitary", is_unitary(w));
  std::ostringstream os;
  for (std::size_t r = 0; r < w.matrix.rows(); ++r) {
    os << "  ";
    for (std::size_t c = 0; c < w.matrix.cols(); ++c) os << (c ? "  " : "") << fmt(w.matrix(r, c).to_complex());
    rep.notes.push_back(os.str());
    os.str("");
  }
  return rep;
}

Report cmd_milgram(std::int64_t m, const std::string& sig) {
  Report rep;
  rep.command = "milgram";
  rep.params = {{"m", m}, {"sig", sig}};
  const DiscriminantForm df(m, parse_signature(sig));
  const MilgramSides s = milgram_sides(df);
  rep.data = {{"gauss_sum", io::to_json(s.gauss_sum)}, {"closed_form", io::to_json(s.closed_form)}};
  rep.notes.push_back("sum e(Q(gamma)) = " + fmt(s.gauss_sum.to_complex()));
  rep.notes.push_back("sqrt(2m) e((b+ - b-)/8) = " + fmt(s.closed_form.to_complex()));
  rep.exact("Milgram", s.gauss_sum == s.closed_form);
  return rep;
}

Report cmd_split(const std::string& in, std::optional<std::int64_t> m, std::optional<std::int64_t> k,
                 const std::string& out, bool any_m) {
  Report rep;
  rep.command = "split";
  io::Container c = io::container_from_json(io::read_file(in));
  if (!c.scalar) throw UsageError(in + " does not hold a scalar expansion");
  const std::int64_t mm = m.value_or(c.m), kk = k.value_or(c.k);
  rep.params = {{"in", in}, {"m", mm}, {"k", kk}};
  const VectorForm F = split_to_vector(*c.scalar, mm, kk, {any_m});
  rep.exact("T support", verify_T_transform(F));
  rep.exact("combine(split(f)) = f", combine_to_scalar(F) == *c.scalar);
  write_or_embed(rep, out, io::to_json(F));
  return rep;
}

Report cmd_combine(const std::string& in, const std::string& out) {
  Report rep;
  rep.command = "combine";
  rep.params = {{"in", in}};
  io::Container c = io::container_from_json(io::read_file(in));
  if (!c.vector) throw UsageError(in + " does not hold a vector form");
  const HarmonicExpansion f = combine_to_scalar(*c.vector);
  const std::int64_t k = (f.weight_num() - 1) / 2;
  rep.exact("plus space", plus_space_check(f, c.m, k));
  rep.exact("split(combine(F)) = F", split_to_vector(f, c.m, k, {true}) == *c.vector,
            "holds exactly when F_gamma = F_-gamma");
  write_or_embed(rep, out, io::to_json(f, c.m));
  return rep;
}

Report cmd_eval(const Globals& g, const std::string& in, const std::string& builtin, std::int64_t window,
                const std::string& points, double accuracy, std::optional<double> growth) {
  Report rep;
  rep.command = "eval";
  rep.params = {{"points", points}, {"accuracy", accuracy}};
  if (!in.empty()) rep.params["in"] = in;
  if (!builtin.empty()) rep.params["builtin"] = builtin, rep.params["window"] = window;
  EvalOptions opt;
  opt.accuracy = accuracy;
  opt.precision = g.precision;
  if (growth) opt.growth = *growth;
  const auto taus = parse_points(points);
  Json values = Json::array();
  std::optional<io::Container> file;
  if (!in.empty()) file = io::container_from_json(io::read_file(in));
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const auto tau = taus[i];
    if (file && file->vector) {
      const VectorValue v = eval_point(*file->vector, tau, opt);
      Json comps = Json::array();
      for (const auto& z : v.value) comps.push_back(complex_json(z));
      values.push_back({{"tau", complex_json(tau)}, {"value", comps}, {"bound", v.bound}});
      rep.notes.push_back("tau = " + fmt(tau) + ": " + std::to_string(v.value.size()) + " components, bound " + fmt(v.bound));
      rep.numeric("truncation at point " + std::to_string(i), v.bound, accuracy == 0 ? 1e-300 : accuracy * (1 + 1e-12));
    } else {
      const HarmonicExpansion f = file ? *file->scalar : load_scalar("", builtin, window).f;
      const ScalarValue v = eval_point(f, tau, opt);
      values.push_back({{"tau", complex_json(tau)}, {"value", complex_json(v.value)}, {"bound", v.bound}});
      rep.notes.push_back("f(" + fmt(tau) + ") = " + fmt(v.value) + "  (bound " + fmt(v.bound) + ")");
      rep.numeric("truncation at point " + std::to_string(i), v.bound, accuracy == 0 ? 1e-300 : accuracy * (1 + 1e-12));
    }
  }
  rep.data["values"] = values;
  return rep;
}

Report cmd_check_plus(const std::string& in, const std::string& builtin, std::int64_t window,
                      std::optional<std::int64_t> m, std::optional<std::int64_t> k) {
  Report rep;
  rep.command = "check-plus";
  const ScalarInput s = load_scalar(in, builtin, window);
  const std::int64_t mm = m.value_or(s.m), kk = k.value_or(s.k);
  rep.params = {{"m", mm}, {"k", kk}};
  rep.exact("plus space", plus_space_check(s.f, mm, kk));
  return rep;
}

Report cmd_check_T(const std::string& in, const std::string& builtin, std::int64_t window) {
  Report rep;
  rep.command = "check-T";
  const VectorForm F = load_vector(in, builtin, window);
  rep.params = {{"m", F.df.index()}, {"dual", F.dual}};
  rep.exact("support on Z + Q(gamma)" + std::string(F.dual ? " (dual: Z - Q(gamma))" : ""), verify_T_transform(F));
  return rep;
}

Report cmd_check_S(const Globals& g, const std::string& in, const std::string& builtin, std::int64_t window,
                   const std::string& points, double tol) {
  Report rep;
  rep.command = "check-S";
  rep.params = {{"points", points}, {"tol", tol}};
  if (!builtin.empty()) rep.params["builtin"] = builtin, rep.params["window"] = window;
  const VectorForm F = load_vector(in, builtin, window);
  const TransformReport t = verify_S_transform(F, parse_points(points), tol, g.precision);
  for (const auto& p : t.points)
    rep.numeric("F(-1/tau) = tau^w rho(S) F(tau) at tau = " + fmt(p.tau), p.deviation, tol,
                "truncation " + fmt(p.bound));
  return rep;
}

Report cmd_fj(const Globals& g, const std::string& in, const std::string& builtin, std::int64_t window,
              std::optional<std::int64_t> m, std::optional<std::int64_t> k, std::int64_t j, const std::string& points,
              double tol) {
  Report rep;
  rep.command = "fj-check";
  const ScalarInput s = load_scalar(in, builtin, window);
  const std::int64_t mm = m.value_or(s.m), kk = k.value_or(s.k);
  rep.params = {{"m", mm}, {"k", kk}, {"j", j}, {"points", points}, {"tol", tol}};
  const FjReport r = f_j_consistency_check(s.f, mm, kk, j, parse_points(points), tol, g.precision);
  rep.data["constant"] = io::to_json(fj_constant(mm, j, nt::mod(kk, 2) == 1));
  for (const auto& p : r.points)
    rep.numeric("f_j identity at tau = " + fmt(p.tau), p.deviation, tol, "truncation " + fmt(p.bound));
  return rep;
}

Report cmd_rank(std::int64_t m, bool any_m) {
  Report rep;
  rep.command = "rank-lemma";
  rep.params = {{"m", m}};
  const RankReport r = rank_lemma_check(m, any_m);
  Json devs = Json::array();
  for (const auto& d : r.deviations)
    devs.push_back({{"beta", d.beta}, {"gamma", d.gamma}, {"computed", d.computed}, {"table", d.table}});
  Json B = Json::array();
  for (const auto& row : r.B) {
    Json jr = Json::array();
    for (const auto& x : row) jr.push_back(x.get_si());
    B.push_back(std::move(jr));
  }
  rep.data = {{"rank", r.rank},
              {"expected_rank", r.expected_rank},
              {"leading_rank", r.leading_rank},
              {"first_columns_independent", r.first_columns_independent},
              {"B", B},
              {"table_deviations", devs}};
  rep.notes.push_back("rank B = " + std::to_string(r.rank) + ", 2 phi(m) = " + std::to_string(r.expected_rank) +
                      ", rank of the leading " + std::to_string(r.expected_rank) + " columns = " +
                      std::to_string(r.leading_rank));
  rep.notes.push_back("entries differing from the case table: " + std::to_string(r.deviations.size()));
  for (const auto& d : r.deviations)
    rep.notes.push_back("  b(" + std::to_string(d.beta) + "," + std::to_string(d.gamma) + ") = " + std::to_string(d.computed) +
                        ", table gives " + std::to_string(d.table));
  rep.exact("B = CA equals the character sums", r.product_matches_bruteforce);
  rep.exact("rank B = 2 phi(m)", r.rank_matches, "rank " + std::to_string(r.rank));
  rep.exact("leading 2 phi(m) columns independent", r.first_columns_independent);
  return rep;
}

Report cmd_gauss(std::int64_t m) {
  Report rep;
  rep.command = "gauss-check";
  rep.params = {{"m", m}};
  const GaussReport r = gauss_sum_identity_check(m);
  rep.data = {{"mismatches", r.mismatches}};
  rep.exact("AR = closed form", r.holds, std::to_string(r.mismatches) + " mismatching entries");
  return rep;
}

Report cmd_b_entry(std::int64_t m, std::int64_t beta, std::int64_t gamma) {
  Report rep;
  rep.command = "b-entry";
  rep.params = {{"m", m}, {"beta", beta}, {"gamma", gamma}};
  const std::int64_t v = b_entry_bruteforce(m, beta, gamma);
  const std::int64_t t = lemma_table_entry(m, beta, gamma);
  rep.data = {{"value", v}, {"table", t}};
  rep.notes.push_back("b = " + std::to_string(v) + " (case table: " + std::to_string(t) + ")");
  rep.exact("symmetric in beta, gamma", v == b_entry_bruteforce(m, gamma, beta));
  return rep;
}

Report cmd_jacobi_decompose(const std::string& in, const std::string& out) {
  Report rep;
  rep.command = "jacobi-decompose";
  rep.params = {{"in", in}};
  const JacobiForm phi = io::jacobi_from_json(io::read_file(in));
  const VectorForm h = theta_decompose(phi);
  rep.exact("dual support", verify_T_transform(h));
  rep.exact("reconstruct(decompose(phi)) = phi", reconstruct(h) == phi);
  write_or_embed(rep, out, io::to_json(h));
  return rep;
}

Report cmd_jacobi_reconstruct(const std::string& in, const std::string& out) {
  Report rep;
  rep.command = "jacobi-reconstruct";
  rep.params = {{"in", in}};
  io::Container c = io::container_from_json(io::read_file(in));
  if (!c.vector) throw UsageError(in + " does not hold a vector form");
  const JacobiForm phi = reconstruct(*c.vector);
  rep.exact("decompose(reconstruct(h)) = h", theta_decompose(phi) == *c.vector);
  write_or_embed(rep, out, io::to_json(phi));
  return rep;
}

Report cmd_jacobi_thm2(const std::string& in, const std::string& out) {
  Report rep;
  rep.command = "jacobi-thm2";
  rep.params = {{"in", in}};
  const JacobiForm phi = io::jacobi_from_json(io::read_file(in));
  const HarmonicExpansion f = thm2_map(phi);
  const std::int64_t k = (f.weight_num() - 1) / 2;
  rep.exact("plus space", plus_space_check(f, phi.index(), k));
  rep.exact("split image = theta decomposition", split_to_vector(f, phi.index(), k) == theta_decompose(phi));
  rep.exact("inverse composite recovers phi", thm2_inverse(f, phi.index()) == phi);
  write_or_embed(rep, out, io::to_json(f, phi.index()));
  return rep;
}

Report cmd_heat(std::int64_t m, std::int64_t r, bool sweep, std::int64_t m_max, std::int64_t r_max) {
  Report rep;
  rep.command = "heat-check";
  if (!sweep) {
    rep.params = {{"m", m}, {"r", r}};
    const HeatCertificate c = heat_operator_term_check(m, r);
    rep.data = {{"tau_term", format_rational(c.tau_term.coeff) + " pi i"},
                {"z_term", format_rational(c.z_term.coeff) + " pi i"}};
    rep.exact("heat operator kills q^(r^2/4m) zeta^r", c.zero,
              "d/dtau gives " + format_rational(c.tau_term.coeff) + " pi i, the z part " + format_rational(c.z_term.coeff) + " pi i");
    return rep;
  }
  rep.params = {{"m_max", m_max}, {"r_max", r_max}};
  std::size_t bad = 0, total = 0;
  for (std::int64_t mm = 1; mm <= m_max; ++mm)
    for (std::int64_t rr = -r_max; rr <= r_max; ++rr, ++total)
      if (!heat_operator_term_check(mm, rr).zero) ++bad;
  rep.exact("heat operator kills every term", bad == 0, std::to_string(total) + " terms, " + std::to_string(bad) + " nonzero");
  return rep;
}

Report cmd_casimir(const Globals& g, const std::string& in, const std::string& builtin, const std::string& tau_s,
                   const std::string& z_s, double h, double tol, std::int64_t radius) {
  Report rep;
  rep.command = "casimir-check";
  rep.params = {{"tau", tau_s}, {"z", z_s}, {"h", h}, {"tol", tol}, {"radius", radius}};
  const auto tau = parse_point(tau_s), z = parse_point(z_s);
  std::complex<double> value;
  if (builtin == "probe") {
    // y q theta_{1,0}: not harmonic in tau
    rep.params["builtin"] = builtin;
    value = casimir_reduced_fd(
        [&](std::complex<double> t, std::complex<double> zz) {
          return t.imag() * std::exp(std::complex<double>(0, 2 * std::numbers::pi) * t) *
                 theta_series_eval(1, 0, t, zz, radius).value;
        },
        1.5, 1, tau, z, h);
  } else {
    JacobiForm phi = builtin.empty() ? io::jacobi_from_json(io::read_file(in)) : builtin_jacobi(builtin);
    if (!builtin.empty()) rep.params["builtin"] = builtin;
    else rep.params["in"] = in;
    value = casimir_reduced_fd(phi, tau, z, h, radius, g.precision);
  }
  rep.data["value"] = complex_json(value);
  rep.numeric("reduced Casimir annihilates phi", std::abs(value), tol);
  return rep;
}

Report cmd_selftest(const Globals& g) {
  Report rep;
  rep.command = "selftest";
  rep.params = {{"seed", g.seed}};
  corpus::Rng rng(g.seed);

  bool milgram = true;
  for (std::int64_t m = 1; m <= 12; ++m) milgram = milgram && milgram_check(DiscriminantForm(m));
  rep.exact("Milgram, m <= 12", milgram);

  bool relations = true;
  for (std::int64_t m = 1; m <= 4; ++m) {
    const DiscriminantForm df(m);
    const auto S = rho_S(df).matrix, T = rho_T(df).matrix;
    const auto S2 = S * S;
    const auto ST = S * T;
    relations = relations && (S2 * S2 == -CycloMatrix::identity(S.rows(), S.order())) && (ST * ST * ST == S2);
  }
  rep.exact("rho(S)^4 = -I and (rho(S) rho(T))^3 = rho(S)^2, m <= 4", relations);

  bool shintani = true, borcherds = true;
  for (std::int64_t m : {1, 2, 3}) {
    const DiscriminantForm df(m);
    for (std::int64_t n = -2; n <= 2; ++n)
      shintani = shintani && shintani_unipotent(df, n).matrix == rho_eval(df, mp_tilde({1, 0, n, 1})).matrix;
    for (int i = 0; i < 5; ++i) borcherds = borcherds && borcherds_eigencheck(df, corpus::gamma0_element(rng, m)).holds;
  }
  rep.exact("unipotent closed form, m <= 3", shintani);
  rep.exact("all-ones eigenvector on Gamma_0(4m), m <= 3", borcherds);

  bool gauss = true;
  for (std::int64_t m : {1, 2, 3, 5}) gauss = gauss && gauss_sum_identity_check(m).holds;
  rep.exact("AR closed form, m in {1,2,3,5}", gauss);

  bool roundtrip = true;
  for (std::int64_t m : {1, 2, 3})
    for (std::int64_t k : {0, 1})
      for (int i = 0; i < 5; ++i) {
        const auto f = corpus::plus_space_expansion(rng, m, k, 8, 24);
        const auto F = split_to_vector(f, m, k);
        roundtrip = roundtrip && combine_to_scalar(F) == f && split_to_vector(combine_to_scalar(F), m, k) == F &&
                    verify_T_transform(F);
      }
  rep.exact("split/combine round trip", roundtrip);

  const VectorForm theta = split_to_vector(builtin_theta(400), 1, 0);
  const auto t = verify_S_transform(theta, {{0, 1}, {1.0 / 3, 1}}, 1e-8, g.precision);
  rep.numeric("theta transformation under S", t.max_deviation, 1e-8);

  bool heat = true;
  for (std::int64_t m = 1; m <= 5; ++m)
    for (std::int64_t r = -10; r <= 10; ++r) heat = heat && heat_operator_term_check(m, r).zero;
  rep.exact("heat operator on theta terms", heat);

  bool jac = true;
  for (std::int64_t m : {1, 2, 3}) {
    const auto phi = corpus::jacobi_form(rng, 2, m, -20, 12, true);
    jac = jac && reconstruct(theta_decompose(phi)) == phi &&
          split_to_vector(thm2_map(phi), m, 1) == theta_decompose(phi);
  }
  rep.exact("Jacobi decomposition and composite map", jac);
  return rep;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weil representations, vector-valued harmonic forms and Jacobi forms"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--json", g.json_path, "write the report as JSON to this path");
  app.add_option("--seed", g.seed, "seed for randomized corpora");

  std::function<Report()> action;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // rho
  std::int64_t m = 1;
  std::string sig = "2,1", word = "S", matrix;
  int sign = 1;
  bool dual = false;
  {
    auto* s = sub("rho", "matrix of the Weil representation on a word or an element");
    s->add_option("--m", m)->required();
    s->add_option("--sig", sig, "signature b+,b-");
    s->add_option("--word", word, "tokens S S' T T' Z");
    s->add_option("--matrix", matrix, "a,b,c,d of an SL2(Z) element (overrides --word)");
    s->add_option("--sign", sign, "branch sign of the element");
    s->add_flag("--dual", dual, "use the dual representation");
    s->callback([&] { action = [&] { return cmd_rho(m, sig, word, matrix, sign, dual); }; });
  }
  {
    auto* s = sub("milgram", "exact check of Milgram's formula");
    s->add_option("--m", m)->required();
    s->add_option("--sig", sig, "signature b+,b-");
    s->callback([&] { action = [&] { return cmd_milgram(m, sig); }; });
  }

  std::string in, outp, builtin, points = "i";
  std::optional<std::int64_t> mo, ko;
  std::int64_t window = 400;
  bool any_m = false;
  double tol = 1e-8, accuracy = 1e-10;
  std::optional<double> growth;
  {
    auto* s = sub("split", "scalar plus-space expansion to vector form");
    s->add_option("--in", in)->required();
    s->add_option("--m", mo);
    s->add_option("--k", ko);
    s->add_option("--out", outp);
    s->add_flag("--any-m", any_m, "allow m that is neither 1 nor prime");
    s->callback([&] { action = [&] { return cmd_split(in, mo, ko, outp, any_m); }; });
  }
  {
    auto* s = sub("combine", "vector form to scalar expansion");
    s->add_option("--in", in)->required();
    s->add_option("--out", outp);
    s->callback([&] { action = [&] { return cmd_combine(in, outp); }; });
  }
  {
    auto* s = sub("eval", "evaluate an expansion at points");
    s->add_option("--in", in);
    s->add_option("--builtin", builtin);
    s->add_option("--window", window, "window of the built-in theta series");
    s->add_option("--points", points, "semicolon-separated points, e.g. \"i;1/3+i\"");
    s->add_option("--accuracy", accuracy, "largest admissible truncation bound");
    s->add_option("--growth", growth, "coefficient growth exponent beyond the window");
    s->callback([&] { action = [&] { return cmd_eval(g, in, builtin, window, points, accuracy, growth); }; });
  }
  {
    auto* s = sub("check-plus", "plus-space support check");
    s->add_option("--in", in);
    s->add_option("--builtin", builtin);
    s->add_option("--window", window);
    s->add_option("--m", mo);
    s->add_option("--k", ko);
    s->callback([&] { action = [&] { return cmd_check_plus(in, builtin, window, mo, ko); }; });
  }
  {
    auto* s = sub("check-T", "support congruence of a vector form");
    s->add_option("--in", in);
    s->add_option("--builtin", builtin);
    s->add_option("--window", window);
    s->callback([&] { action = [&] { return cmd_check_T(in, builtin, window); }; });
  }
  {
    auto* s = sub("check-S", "numeric S-transformation check");
    s->add_option("--in", in);
    s->add_option("--builtin", builtin);
    s->add_option("--window", window);
    s->add_option("--points", points);
    s->add_option("--tol", tol);
    s->callback([&] { action = [&] { return cmd_check_S(g, in, builtin, window, points, tol); }; });
  }
  std::int64_t j = 1;
  {
    auto* s = sub("fj-check", "numeric f_j identity");
    s->add_option("--in", in);
    s->add_option("--builtin", builtin);
    s->add_option("--window", window);
    s->add_option("--m", mo);
    s->add_option("--k", ko);
    s->add_option("--j", j);
    s->add_option("--points", points);
    s->add_option("--tol", tol);
    s->callback([&] { action = [&] { return cmd_fj(g, in, builtin, window, mo, ko, j, points, tol); }; });
  }
  {
    auto* s = sub("rank-lemma", "exact rank of B = CA");
    s->add_option("--m", m)->required();
    s->add_flag("--any-m", any_m);
    s->callback([&] { action = [&] { return cmd_rank(m, any_m); }; });
  }
  {
    auto* s = sub("gauss-check", "exact Gauss-sum identity for AR");
    s->add_option("--m", m)->required();
    s->callback([&] { action = [&] { return cmd_gauss(m); }; });
  }
  std::int64_t beta = 0, gamma = 0;
  {
    auto* s = sub("b-entry", "character sum entry of B");
    s->add_option("--m", m)->required();
    s->add_option("--beta", beta)->required();
    s->add_option("--gamma", gamma)->required();
    s->callback([&] { action = [&] { return cmd_b_entry(m, beta, gamma); }; });
  }
  {
    auto* s = sub("jacobi-decompose", "theta decomposition of a Jacobi form");
    s->add_option("--in", in)->required();
    s->add_option("--out", outp);
    s->callback([&] { action = [&] { return cmd_jacobi_decompose(in, outp); }; });
  }
  {
    auto* s = sub("jacobi-reconstruct", "Jacobi form from theta components");
    s->add_option("--in", in)->required();
    s->add_option("--out", outp);
    s->callback([&] { action = [&] { return cmd_jacobi_reconstruct(in, outp); }; });
  }
  {
    auto* s = sub("jacobi-thm2", "Jacobi form to scalar plus-space expansion");
    s->add_option("--in", in)->required();
    s->add_option("--out", outp);
    s->callback([&] { action = [&] { return cmd_jacobi_thm2(in, outp); }; });
  }
  std::int64_t r = 0, m_max = 10, r_max = 25;
  bool sweep = false;
  {
    auto* s = sub("heat-check", "exact heat-operator check on theta terms");
    s->add_option("--m", m);
    s->add_option("--r", r);
    s->add_flag("--sweep", sweep, "check all m <= m-max, |r| <= r-max");
    s->add_option("--m-max", m_max);
    s->add_option("--r-max", r_max);
    s->callback([&] { action = [&] { return cmd_heat(m, r, sweep, m_max, r_max); }; });
  }
  std::string tau_s = "i", z_s = "0.1+0.05i";
  double h = 1e-3, ctol = 1e-4;
  std::int64_t radius = 40;
  {
    auto* s = sub("casimir-check", "finite-difference reduced Casimir check");
    s->add_option("--in", in);
    s->add_option("--builtin", builtin, "harmonic or probe");
    s->add_option("--tau", tau_s);
    s->add_option("--z", z_s);
    s->add_option("--step", h, "finite-difference step");
    s->add_option("--tol", ctol);
    s->add_option("--radius", radius);
    s->callback([&] { action = [&] { return cmd_casimir(g, in, builtin, tau_s, z_s, h, ctol, radius); }; });
  }
  {
    auto* s = sub("selftest", "quick run of the exact and numeric checks");
    s->callback([&] { action = [&] { return cmd_selftest(g); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    g.precision = precision_from_env();
    Report rep = action();
    rep.params["precision_bits"] = g.precision;
    out << rep.text();
    if (!g.json_path.empty()) io::write_file(g.json_path, rep.to_json());
    return rep.pass() ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace weil::cli
