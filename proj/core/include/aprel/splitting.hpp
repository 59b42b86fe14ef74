#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aprel/syntax.hpp"

namespace aprel {

struct FunctionSymbol {
  std::string name;
  std::size_t arity = 0;

  friend auto operator<=>(const FunctionSymbol&, const FunctionSymbol&) = default;
};

/// Function symbols (constants included) occurring in the set, in symbol id
/// order.
std::vector<FunctionSymbol> function_symbols(const ClauseSet& set);

/// Which variable of which clause to split, and how the function symbols
/// are grouped. Every group yields one instance per member symbol; groups
/// only label which descendants belong together.
struct SplitPlan {
  ClauseId clause = 0;
  std::string variable;
  std::vector<std::vector<FunctionSymbol>> groups;
};

/// One singleton group per symbol of the set plus `extra_constants`.
SplitPlan full_split_plan(const ClauseSet& set, ClauseId clause, std::string variable,
                          const std::vector<std::string>& extra_constants = {});

/// Two groups whose total occurrence counts are as even as a greedy
/// assignment (heaviest symbol first) makes them. Needs two symbols.
SplitPlan binary_split_plan(const ClauseSet& set, ClauseId clause, std::string variable,
                            const std::vector<std::string>& extra_constants = {});

struct SplitResult {
  ClauseSet set;
  /// Ids of the replacement clauses, ascending.
  std::vector<ClauseId> descendants;
  /// Group index of each descendant.
  std::vector<std::size_t> group_of;
};

/// Replaces the clause by its instances x ↦ f(_svN, ...) for every symbol of
/// the plan. Replacements take fresh ids at the end of the set. Throws Error
/// when the variable is not in the clause, when the plan's groups are empty,
/// overlap or miss a symbol of the set, or when no constant is available.
SplitResult split_clause(const ClauseSet& set, const SplitPlan& plan);

/// The variable whose full split leaves the most literal instances without
/// any of the partners their original literal had among the other clauses.
/// Ties go to the earliest variable; none for ground clauses, sets without
/// constants, or when no split removes a link.
std::optional<std::string> choose_split_variable(const ClauseSet& set, ClauseId clause);

}  // namespace aprel
