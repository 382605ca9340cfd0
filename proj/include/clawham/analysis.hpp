#pragma once

// Single-graph pipeline: detect -> closure -> root -> trails -> conditions.

#include <cstdint>
#include <string>

#include "clawham/graph.hpp"
#include "clawham/report.hpp"

namespace clawham {

struct AnalysisOptions {
  std::string id = "input";
  std::uint64_t budget = kDefaultBudget;
  bool with_trace = false;
  bool timings = false;  ///< wall-clock per stage; makes output non-deterministic
};

struct Analysis {
  Json report;
  /// claw-free, 2-connected, Broersma and provably non-hamiltonian.
  bool violation = false;
  /// Some exact search stopped on the budget.
  bool inconclusive = false;
};

Analysis analyze(const SimpleGraph& g, const AnalysisOptions& opts = {});

}  // namespace clawham
