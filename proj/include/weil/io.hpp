#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "weil/cyclo.hpp"
#include "weil/discform.hpp"
#include "weil/expansions.hpp"
#include "weil/jacobi.hpp"

namespace weil::io {

using Json = nlohmann::ordered_json;

/// {"N": order, "coeffs": [["num/den", j], ...]} over the nonzero power-basis coefficients.
Json to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclo_from_json(const Json& j);

/// Exact coefficients as "num/den" strings, floats as numbers.
Json to_json(const Coeff& c);
Coeff coeff_from_json(const Json& j);

Json to_json(const DiscriminantForm& df);
DiscriminantForm discform_from_json(const Json& j);

/// Expansion container; k is (weight_num - 1) / 2.
Json to_json(const HarmonicExpansion& f, std::int64_t m);
Json to_json(const VectorForm& F);

struct Container {
  std::string kind;  // "scalar" or "vector"
  std::int64_t m = 1;
  std::int64_t k = 0;
  std::optional<HarmonicExpansion> scalar;
  std::optional<VectorForm> vector;
};

Container container_from_json(const Json& j);

Json to_json(const JacobiForm& phi);
JacobiForm jacobi_from_json(const Json& j);

Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);

}  // namespace weil::io
