#pragma once

#include <filesystem>
#include <string>

#include "toric/io.hpp"

namespace toric::testing {

inline std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(TORIC_FIXTURE_DIR) / rel;
}

inline LaurentPolynomial fixture_polynomial(const std::string& rel) {
  return io::polynomial_from_json(io::read_json_file(fixture(rel)));
}

inline std::vector<std::vector<ResolutionStep>> fixture_script(const std::string& rel) {
  return io::script_from_json(io::read_json_file(fixture(rel)));
}

}  // namespace toric::testing
