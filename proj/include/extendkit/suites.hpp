#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extendkit/verify.hpp"

namespace extendkit {

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  // isometry only: hausdorff, omega-riesz, omega-tietze, bohr or theta.
  std::optional<std::string> op;
  // Counterexample CSV curves are written here when set.
  std::string out_dir;
};

const std::vector<std::string>& suite_names();

// Throws InputError for an unknown suite or --op value.
std::vector<PropertyReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace extendkit
