#pragma once

#include <functional>

#include "aprel/dpll.hpp"

namespace aprel::detail {

struct BudgetExhausted {};

/// First unit clause whose atom passes `eligible`, or 0.
int find_unit(const PropCnf& q, const std::function<bool(int)>& eligible);
Assignment model_from_trail(int num_atoms, const std::vector<int>& trail);

/// Plain recursive search; calls are tallied in `*counter` so a relevance
/// run can book its fallback work separately.
struct PlainSearch {
  const SolverConfig& config;
  SolveStats& stats;
  std::vector<int>& trail;
  std::uint64_t* counter;

  void charge() const {
    if (config.max_calls && stats.calls + stats.fallback_calls >= *config.max_calls) {
      throw BudgetExhausted{};
    }
  }
  Verdict run(PropCnf q);
};

}  // namespace aprel::detail
