#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "aprel/ground.hpp"

namespace aprel {

enum class Verdict : std::uint8_t { sat, unsat, unknown };
std::string_view verdict_name(Verdict v);

/// Which unit clauses are used to simplify before splitting. For plain DPLL
/// `relevant_only` behaves like `all`.
enum class UnitPolicy : std::uint8_t { off, relevant_only, all };

/// How the split atom is picked among the candidates.
enum class Heuristic : std::uint8_t {
  max_occurrence,  ///< most occurrences in the current clauses, ties to the smallest atom
  first_atom,      ///< smallest atom
};

struct SolverConfig {
  UnitPolicy units = UnitPolicy::relevant_only;
  Heuristic heuristic = Heuristic::max_occurrence;
  bool positive_first = true;
  /// Give up with `Verdict::unknown` after this many calls.
  std::optional<std::uint64_t> max_calls;
};

struct SolveStats {
  std::uint64_t calls = 0;
  std::uint64_t splits = 0;
  std::uint64_t units = 0;
  /// Calls made by the plain solver when a relevance run falls back to it.
  std::uint64_t fallback_calls = 0;
  /// Recursive calls whose stepping sequence did not shrink; always 0.
  std::uint64_t metric_violations = 0;
};

struct SolveResult {
  Verdict verdict = Verdict::unknown;
  /// Indexed by atom id; 0 means unassigned. Empty unless sat.
  Assignment model;
  /// Literals in the order they were assigned.
  std::vector<int> trail;
  SolveStats stats;
};

/// Q|L: clauses containing `lit` dropped, `-lit` removed from the rest.
PropCnf cofactor(const PropCnf& q, int lit);
/// Ground form of the same operation; ids of surviving clauses are kept.
/// Throws Error when the set or the literal has variables.
ClauseSet cofactor(const ClauseSet& q, const Literal& lit);

/// Atom picked by the heuristic among `candidates` (ascending), counting
/// occurrences in `q`.
int pick_atom(const PropCnf& q, const std::vector<int>& candidates, Heuristic heuristic);

/// Recursive Davis-Putnam-Logemann-Loveland search.
SolveResult dpll(const PropCnf& q, const SolverConfig& config = {});

}  // namespace aprel
