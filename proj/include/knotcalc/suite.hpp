#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotcalc/corpus.hpp"

namespace knotcalc {

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail", or "skip"
  std::string citation;
  std::string detail;
};

struct RunReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

// Runs every module property against the corpus plus seeded random move
// applications. Deterministic for a fixed (corpus, seed); check order is
// canonical.
RunReport run_suite(const Corpus& corpus, std::uint64_t seed);

std::string report_text(const RunReport& report);

// One JSON object per line.
std::string report_json(const RunReport& report);

}  // namespace knotcalc
