#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

// Seeded verification suites behind `subres verify`. Every instance draws
// from its own seed, echoed in failure records so it can be replayed.
namespace subres::cli {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int max_degree = 3;
  int count = 10;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t redraws = 0;  // instances discarded for a singular V_T or E(t) = 0
  nlohmann::json failures = nlohmann::json::array();

  nlohmann::json to_json(std::uint64_t seed) const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace subres::cli
