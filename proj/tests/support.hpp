#pragma once

#include <casimir/validate.hpp>

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace casimir::fx {

inline const std::vector<validate::Fixture>& fixtures() {
  static const auto fx = validate::load_fixtures(CASIMIR_DEFAULT_FIXTURES);
  return fx;
}

/// Fixture whose label (name followed by its parameters in key order) is `label`.
inline const validate::Fixture& fixture(const std::string& label) {
  for (const auto& f : fixtures())
    if (f.label() == label) return f;
  throw validate::FixtureError("no fixture " + label);
}

inline std::vector<validate::Fixture> fixtures_named(const std::string& name) {
  std::vector<validate::Fixture> out;
  for (const auto& f : fixtures())
    if (f.name == name) out.push_back(f);
  return out;
}

} // namespace casimir::fx

#define EXPECT_REL(actual, expected, tol)                                                                              \
  EXPECT_LE(std::abs((actual) - (expected)), (tol) * std::abs(expected))                                               \
      << "actual " << (actual) << " expected " << (expected) << ' '
