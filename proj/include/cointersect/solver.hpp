#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cointersect/cnf.hpp"

namespace coint {

enum class SatStatus { sat, unsat, unknown };

const char* status_name(SatStatus s);

struct SolveLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::optional<std::uint64_t> max_conflicts;
  const std::atomic<bool>* cancel = nullptr;  // polled between conflicts
};

struct SolveStats {
  std::uint64_t conflicts = 0;
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
};

struct SolveResult {
  SatStatus status = SatStatus::unknown;
  Model model;  // filled when sat
  SolveStats stats;
};

/// CDCL: two watched literals, first-UIP learning, VSIDS, phase saving, Luby
/// restarts and LBD-based clause deletion. Deterministic.
SolveResult solve(int var_count, const std::vector<std::vector<int>>& clauses, const SolveLimits& limits = {});
SolveResult solve(const CnfInstance& c, const SolveLimits& limits = {});

}  // namespace coint
