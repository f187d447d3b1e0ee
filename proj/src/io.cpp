#include "weil/io.hpp"

#include <fstream>
#include <stdexcept>

namespace weil::io {

namespace {

template <class T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("JSON: missing field '") + key + "'");
  return j.at(key).get<T>();
}

mpq_class rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  throw std::invalid_argument("JSON: expected a rational \"num/den\"");
}

}  // namespace

Json to_json(const CyclotomicNumber& x) {
  Json coeffs = Json::array();
  const auto& c = x.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j)
    if (sgn(c[j]) != 0) coeffs.push_back(Json::array({format_rational(c[j]), j}));
  return Json{{"N", x.order()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclo_from_json(const Json& j) {
  const int order = required<int>(j, "N");
  if (order < 1) throw std::invalid_argument("JSON: N must be positive");
  std::vector<mpq_class> powers(static_cast<std::size_t>(order));
  for (const auto& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 2) throw std::invalid_argument("JSON: coefficient must be [\"num/den\", j]");
    const long e = entry[1].get<long>();
    if (e < 0) throw std::invalid_argument("JSON: negative exponent");
    powers[static_cast<std::size_t>(e % order)] += rational_from_json(entry[0]);
  }
  return CyclotomicNumber::from_powers(order, std::move(powers));
}

Json to_json(const Coeff& c) {
  if (const auto* q = std::get_if<mpq_class>(&c)) return format_rational(*q);
  return std::get<double>(c);
}

Coeff coeff_from_json(const Json& j) {
  if (j.is_null()) return mpq_class(0);
  if (j.is_string() || j.is_number_integer()) return rational_from_json(j);
  if (j.is_number_float()) return j.get<double>();
  throw std::invalid_argument("JSON: coefficient must be \"num/den\" or a number");
}

Json to_json(const DiscriminantForm& df) {
  return Json{{"m", df.index()}, {"sig", Json::array({df.signature().plus, df.signature().minus})}};
}

DiscriminantForm discform_from_json(const Json& j) {
  Signature sig;
  if (j.contains("sig")) {
    const auto& s = j.at("sig");
    if (!s.is_array() || s.size() != 2) throw std::invalid_argument("JSON: sig must be [b+, b-]");
    sig = {s[0].get<int>(), s[1].get<int>()};
  }
  return DiscriminantForm(required<std::int64_t>(j, "m"), sig);
}

namespace {

void append_coeffs(Json& out, const HarmonicExpansion& f, std::optional<std::int64_t> gamma) {
  for (const auto& [n, p] : f.coefficients()) {
    Json e;
    if (gamma) e["gamma"] = *gamma;
    e["n"] = format_rational(n);
    e["c_plus"] = to_json(p.plus);
    e["c_minus"] = to_json(p.minus);
    out.push_back(std::move(e));
  }
}

}  // namespace

Json to_json(const HarmonicExpansion& f, std::int64_t m) {
  Json coeffs = Json::array();
  append_coeffs(coeffs, f, std::nullopt);
  return Json{{"kind", "scalar"},
              {"m", m},
              {"k", (f.weight_num() - 1) / 2},
              {"dual", false},
              {"weight_num", f.weight_num()},
              {"coeffs", coeffs},
              {"window", Json::array({format_rational(f.window_lo()), format_rational(f.window_hi())})}};
}

Json to_json(const VectorForm& F) {
  Json coeffs = Json::array();
  for (std::size_t g = 0; g < F.components.size(); ++g) append_coeffs(coeffs, F.components[g], static_cast<std::int64_t>(g));
  const auto& c0 = F.components.front();
  Json out{{"kind", "vector"},
           {"m", F.df.index()},
           {"k", (F.weight_num() - 1) / 2},
           {"dual", F.dual},
           {"weight_num", F.weight_num()},
           {"coeffs", coeffs},
           {"window", Json::array({format_rational(c0.window_lo()), format_rational(c0.window_hi())})}};
  if (!(F.df.signature() == Signature{})) out["sig"] = Json::array({F.df.signature().plus, F.df.signature().minus});
  return out;
}

Container container_from_json(const Json& j) {
  Container out;
  out.kind = required<std::string>(j, "kind");
  out.m = required<std::int64_t>(j, "m");
  out.k = required<std::int64_t>(j, "k");
  const int weight_num = j.contains("weight_num") ? j.at("weight_num").get<int>() : static_cast<int>(2 * out.k + 1);
  const auto& w = j.at("window");
  if (!w.is_array() || w.size() != 2) throw std::invalid_argument("JSON: window must be [lo, hi]");
  const mpq_class lo = rational_from_json(w[0]), hi = rational_from_json(w[1]);
  auto pair_of = [](const Json& e) {
    return CoeffPair{coeff_from_json(e.value("c_plus", Json())), coeff_from_json(e.value("c_minus", Json()))};
  };
  if (out.kind == "scalar") {
    HarmonicExpansion f(weight_num, lo, hi);
    for (const auto& e : j.at("coeffs")) f.set(rational_from_json(e.at("n")), pair_of(e));
    out.scalar = std::move(f);
  } else if (out.kind == "vector") {
    Json dfj{{"m", out.m}};
    if (j.contains("sig")) dfj["sig"] = j.at("sig");
    VectorForm F(discform_from_json(dfj), j.value("dual", false), weight_num, lo, hi);
    for (const auto& e : j.at("coeffs")) {
      const std::int64_t g = required<std::int64_t>(e, "gamma");
      if (g < 0 || g >= F.df.group_order()) throw std::invalid_argument("JSON: gamma out of range");
      F.components[static_cast<std::size_t>(g)].set(rational_from_json(e.at("n")), pair_of(e));
    }
    out.vector = std::move(F);
  } else {
    throw std::invalid_argument("JSON: kind must be \"scalar\" or \"vector\"");
  }
  return out;
}

Json to_json(const JacobiForm& phi) {
  auto part = [](const std::map<JacobiForm::Key, Coeff>& m) {
    Json a = Json::array();
    for (const auto& [k, v] : m) a.push_back(Json{{"D", k.first}, {"r", k.second}, {"v", to_json(v)}});
    return a;
  };
  return Json{{"kind", "jacobi"},     {"k", phi.weight()},         {"m", phi.index()},       {"d_max", phi.d_max()},
              {"d_min", phi.d_min()}, {"c_plus", part(phi.plus())}, {"c_minus", part(phi.minus())}};
}

JacobiForm jacobi_from_json(const Json& j) {
  if (required<std::string>(j, "kind") != "jacobi") throw std::invalid_argument("JSON: kind must be \"jacobi\"");
  const int k = required<int>(j, "k");
  const std::int64_t m = required<std::int64_t>(j, "m");
  const Json plus = j.value("c_plus", Json::array()), minus = j.value("c_minus", Json::array());
  // Without an explicit window the stored keys define it.
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (const auto* part : {&plus, &minus})
    for (const auto& e : *part) {
      const auto D = required<std::int64_t>(e, "D");
      lo = any ? std::min(lo, D) : D;
      hi = any ? std::max(hi, D) : D;
      any = true;
    }
  JacobiForm phi(k, m, j.value("d_max", hi), j.value("d_min", lo));
  for (const auto& e : plus) phi.set_plus(e.at("D").get<std::int64_t>(), required<std::int64_t>(e, "r"), coeff_from_json(e.at("v")));
  for (const auto& e : minus) phi.set_minus(e.at("D").get<std::int64_t>(), required<std::int64_t>(e, "r"), coeff_from_json(e.at("v")));
  return phi;
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace weil::io
