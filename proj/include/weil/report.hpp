#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weil/io.hpp"

namespace weil {

/// One pass/fail record of a report.
struct CheckRecord {
  std::string name;
  std::string mode;  // "exact" or "numeric"
  bool pass = false;
  std::optional<double> deviation;
  std::optional<double> tolerance;
  std::string detail;
};

/// Machine-readable outcome of a command: overall pass iff every record passes.
struct Report {
  std::string command;
  io::Json params = io::Json::object();
  std::vector<CheckRecord> checks;
  io::Json data = io::Json::object();
  std::vector<std::string> notes;

  void exact(std::string name, bool pass, std::string detail = {});
  void numeric(std::string name, double deviation, double tolerance, std::string detail = {});

  bool pass() const;
  io::Json to_json() const;
  std::string text() const;
};

}  // namespace weil
