#include "weil/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace weil {

void Report::exact(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), "exact", pass, std::nullopt, std::nullopt, std::move(detail)});
}

void Report::numeric(std::string name, double deviation, double tolerance, std::string detail) {
  checks.push_back({std::move(name), "numeric", deviation < tolerance, deviation, tolerance, std::move(detail)});
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

io::Json Report::to_json() const {
  io::Json records = io::Json::array();
  for (const auto& c : checks) {
    io::Json r{{"name", c.name}, {"mode", c.mode}, {"pass", c.pass}};
    if (c.deviation) r["deviation"] = *c.deviation;
    if (c.tolerance) r["tolerance"] = *c.tolerance;
    if (!c.detail.empty()) r["detail"] = c.detail;
    records.push_back(std::move(r));
  }
  io::Json out{{"command", command}, {"params", params}, {"checks", records}, {"status", pass() ? "pass" : "fail"}};
  if (!data.empty()) out["data"] = data;
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

std::string Report::text() const {
  std::ostringstream os;
  os << command << '\n';
  for (const auto& n : notes) os << "  " << n << '\n';
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << " (" << c.mode;
    if (c.deviation) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ", deviation %.3e", *c.deviation);
      os << buf;
      if (c.tolerance) {
        std::snprintf(buf, sizeof buf, c.pass ? " < %.1e" : " >= %.1e", *c.tolerance);
        os << buf;
      }
    }
    os << ")";
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (pass() ? "status: pass" : "status: fail") << '\n';
  return os.str();
}

}  // namespace weil
