#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aprel/syntax.hpp"

namespace aprel {

/// Ground atoms of a variable-free clause set, numbered 1..n in natural order
/// of their printed form (so DIMACS atoms keep their numeric order).
class AtomTable {
 public:
  AtomTable() = default;
  /// Throws Error when `set` contains variables.
  static AtomTable build(const ClauseSet& set);

  /// 0 when the atom is unknown.
  int id(const Term& atom) const;
  int size() const noexcept { return static_cast<int>(atoms_.size()); }
  const Term& atom(int id) const { return atoms_.at(static_cast<std::size_t>(id - 1)); }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id - 1)); }
  /// The DIMACS variable number when the atom is a zero-arity integer name.
  std::optional<long> dimacs_number(int id) const;

 private:
  std::vector<Term> atoms_;
  std::vector<std::string> names_;
  std::unordered_map<Term, int, TermHash> index_;
};

/// A propositional clause over signed atom ids: literals sorted by atom, then
/// negative before positive; no duplicates.
struct PropClause {
  ClauseId id = 0;
  std::vector<int> lits;

  bool empty() const noexcept { return lits.empty(); }
  std::size_t size() const noexcept { return lits.size(); }
  bool contains(int lit) const;
  bool is_tautology() const;
  bool all_negative() const;
  bool all_positive() const;

  friend bool operator==(const PropClause&, const PropClause&) = default;
};

PropClause make_prop_clause(ClauseId id, std::vector<int> lits);

struct PropCnf {
  int num_atoms = 0;
  std::vector<PropClause> clauses;

  bool has_empty_clause() const;
  std::size_t size() const noexcept { return clauses.size(); }
  bool empty() const noexcept { return clauses.empty(); }
  /// Distinct atoms occurring, ascending.
  std::vector<int> atoms() const;
  std::vector<ClauseId> ids() const;
};

PropCnf to_prop(const ClauseSet& set, const AtomTable& atoms);
PropCnf to_prop(const ClauseSet& set);

/// Value of an atom under a partial assignment: +1 true, -1 false, 0 unassigned.
using Assignment = std::vector<signed char>;

bool clause_satisfied(const PropClause& clause, const Assignment& assignment);

}  // namespace aprel
