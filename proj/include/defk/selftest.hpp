#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "defk/corpus.hpp"

namespace defk {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> facts;  // deterministic key/value
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Runs the full cross-oracle corpus: four-way completion agreement,
/// telescope identification, quotient compatibility, the ku-calculus laws and
/// the worked example modules, and the finite-group pipeline. Deterministic
/// for a fixed seed; no timestamps.
SelftestReport run_selftest(std::uint64_t seed = kDefaultSeed);

/// Plain-text report, one fact per line, byte-identical across runs.
std::string format_report(const SelftestReport& report);

}  // namespace defk
