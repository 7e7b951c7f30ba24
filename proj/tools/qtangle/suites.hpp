#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtangle::cli {

struct SuiteOptions {
  std::size_t samples = 0;  // 0: the suite's default
  std::uint64_t seed = 1;
  std::size_t max_crossings = 6;
};

struct SuiteReport {
  std::vector<std::string> lines;
  bool pass = true;
};

// theory, functoriality, monoidality, moves, framing, oracle, tqft1,
// kz-flatness.
const std::vector<std::string>& suite_names();

// Runs one suite. Output depends only on the options.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace qtangle::cli
