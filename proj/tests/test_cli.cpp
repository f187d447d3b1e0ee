#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "weil/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "weil");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = weil::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

const std::filesystem::path tmp = std::filesystem::temp_directory_path();

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"milgram", "--m", "5"}).code == 0);
  CHECK(run({"milgram", "--m", "5", "--sig", "2,2"}).code == 2);
  CHECK(run({"check-S", "--builtin", "theta", "--points", "i", "--tol", "1e-8"}).code == 0);
  CHECK(run({"rank-lemma", "--m", "3"}).code == 0);
  CHECK(run({"rank-lemma", "--m", "5"}).code == 2);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"milgram"}).code == 1);
  CHECK(run({"split", "--in", "/nonexistent.json"}).code == 1);
  CHECK(run({"eval", "--builtin", "theta", "--window", "5", "--points", "0.01i", "--accuracy", "1e-10"}).code == 1);
  CHECK(run({"casimir-check", "--builtin", "harmonic"}).code == 0);
  CHECK(run({"casimir-check", "--builtin", "probe"}).code == 2);
}

TEST_CASE("precision from the environment") {
  ::setenv("WEIL_PRECISION_BITS", "20", 1);
  CHECK(run({"milgram", "--m", "2"}).code == 1);
  ::setenv("WEIL_PRECISION_BITS", "200", 1);
  const auto r = run({"eval", "--builtin", "theta", "--points", "i", "--json", (tmp / "weil_prec.json").string()});
  CHECK(r.code == 0);
  CHECK(slurp(tmp / "weil_prec.json").find("\"precision_bits\": 200") != std::string::npos);
  ::unsetenv("WEIL_PRECISION_BITS");
}

TEST_CASE("JSON reports are byte-identical across runs") {
  const auto a = tmp / "weil_a.json", b = tmp / "weil_b.json";
  for (std::vector<std::string> cmd : {std::vector<std::string>{"selftest", "--seed", "5"},
                                       std::vector<std::string>{"rank-lemma", "--m", "7"},
                                       std::vector<std::string>{"check-S", "--builtin", "theta", "--points", "i;1/3+i"}}) {
    auto ca = cmd, cb = cmd;
    ca.insert(ca.end(), {"--json", a.string()});
    cb.insert(cb.end(), {"--json", b.string()});
    run(ca);
    run(cb);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
  }
}

TEST_CASE("split, combine and Jacobi commands through files") {
  const auto theta = tmp / "weil_theta.json", vec = tmp / "weil_vec.json", back = tmp / "weil_back.json";
  // the first terms of theta as a scalar container
  std::ofstream(theta) << R"({"kind": "scalar", "m": 1, "k": 0, "dual": false, "weight_num": 1,
    "coeffs": [{"n": "0/1", "c_plus": "1/1", "c_minus": "0/1"}, {"n": "1/1", "c_plus": "2/1", "c_minus": "0/1"},
               {"n": "4/1", "c_plus": "2/1", "c_minus": "0/1"}], "window": ["0/1", "5/1"]})";
  CHECK(run({"split", "--in", theta.string(), "--out", vec.string()}).code == 0);
  CHECK(run({"check-T", "--in", vec.string()}).code == 0);
  CHECK(run({"combine", "--in", vec.string(), "--out", back.string()}).code == 0);
  CHECK(run({"check-plus", "--in", back.string()}).code == 0);

  const auto jac = tmp / "weil_jac.json", h = tmp / "weil_h.json";
  std::ofstream(jac) << R"({"kind": "jacobi", "k": 2, "m": 1, "c_plus": [{"D": -4, "r": 0, "v": "1"},
    {"D": -3, "r": 1, "v": "-2"}], "c_minus": [{"D": 4, "r": 0, "v": "1/3"}]})";
  CHECK(run({"jacobi-decompose", "--in", jac.string(), "--out", h.string()}).code == 0);
  CHECK(run({"jacobi-reconstruct", "--in", h.string()}).code == 0);
  CHECK(run({"jacobi-thm2", "--in", jac.string()}).code == 0);
  CHECK(run({"casimir-check", "--in", jac.string()}).code == 0);
  for (const auto& p : {theta, vec, back, jac, h}) std::filesystem::remove(p);
}

TEST_CASE("matrix input to rho") {
  const auto r = run({"rho", "--m", "2", "--matrix", "1,0,3,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] word reproduces the element") != std::string::npos);
  CHECK(run({"rho", "--m", "2", "--matrix", "1,1,1,1"}).code == 1);
}
