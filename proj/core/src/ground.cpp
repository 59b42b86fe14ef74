#include "aprel/ground.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace aprel {

AtomTable AtomTable::build(const ClauseSet& set) {
  struct Entry {
    Term atom;
    std::string name;
  };
  std::unordered_map<Term, std::size_t, TermHash> seen;
  std::vector<Entry> entries;
  for (const auto& clause : set) {
    if (!clause.is_ground()) {
      throw Error("clause " + std::to_string(clause.id()) + " is not ground");
    }
    for (const auto& l : clause.literals()) {
      if (seen.emplace(l.atom, entries.size()).second) {
        entries.push_back({l.atom, format_atom(l.atom, set.symbols(), {})});
      }
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (int c = natural_compare(a.name, b.name); c != 0) return c < 0;
    return a.atom < b.atom;
  });
  AtomTable table;
  for (auto& e : entries) {
    // Quoted numeric names print as '12'; keep the bare number for DIMACS.
    if (e.atom.arity() == 0) e.name = set.symbols().name(e.atom.symbol());
    table.index_.emplace(e.atom, static_cast<int>(table.atoms_.size()) + 1);
    table.atoms_.push_back(std::move(e.atom));
    table.names_.push_back(std::move(e.name));
  }
  return table;
}

int AtomTable::id(const Term& atom) const {
  auto it = index_.find(atom);
  return it == index_.end() ? 0 : it->second;
}

std::optional<long> AtomTable::dimacs_number(int id) const {
  if (atom(id).arity() != 0) return std::nullopt;
  const auto& n = name(id);
  long value = 0;
  auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), value);
  if (ec != std::errc() || ptr != n.data() + n.size() || value <= 0) return std::nullopt;
  return value;
}

bool PropClause::contains(int lit) const {
  auto it = std::lower_bound(lits.begin(), lits.end(), lit, [](int a, int b) {
    int aa = std::abs(a), bb = std::abs(b);
    return aa != bb ? aa < bb : a < b;
  });
  return it != lits.end() && *it == lit;
}

bool PropClause::is_tautology() const {
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i] == -lits[i - 1]) return true;
  }
  return false;
}

bool PropClause::all_negative() const {
  return std::all_of(lits.begin(), lits.end(), [](int l) { return l < 0; });
}

bool PropClause::all_positive() const {
  return std::all_of(lits.begin(), lits.end(), [](int l) { return l > 0; });
}

PropClause make_prop_clause(ClauseId id, std::vector<int> lits) {
  std::sort(lits.begin(), lits.end(), [](int a, int b) {
    int aa = std::abs(a), bb = std::abs(b);
    return aa != bb ? aa < bb : a < b;
  });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return PropClause{id, std::move(lits)};
}

bool PropCnf::has_empty_clause() const {
  return std::any_of(clauses.begin(), clauses.end(), [](const PropClause& c) { return c.empty(); });
}

std::vector<int> PropCnf::atoms() const {
  std::vector<char> present(static_cast<std::size_t>(num_atoms) + 1, 0);
  for (const auto& c : clauses) {
    for (int l : c.lits) present[static_cast<std::size_t>(std::abs(l))] = 1;
  }
  std::vector<int> out;
  for (int a = 1; a <= num_atoms; ++a) {
    if (present[static_cast<std::size_t>(a)]) out.push_back(a);
  }
  return out;
}

std::vector<ClauseId> PropCnf::ids() const {
  std::vector<ClauseId> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) out.push_back(c.id);
  return out;
}

PropCnf to_prop(const ClauseSet& set, const AtomTable& atoms) {
  PropCnf cnf;
  cnf.num_atoms = atoms.size();
  cnf.clauses.reserve(set.size());
  for (const auto& clause : set) {
    std::vector<int> lits;
    lits.reserve(clause.size());
    for (const auto& l : clause.literals()) {
      int a = atoms.id(l.atom);
      if (a == 0) throw Error("atom missing from atom table");
      lits.push_back(l.positive ? a : -a);
    }
    cnf.clauses.push_back(make_prop_clause(clause.id(), std::move(lits)));
  }
  return cnf;
}

PropCnf to_prop(const ClauseSet& set) { return to_prop(set, AtomTable::build(set)); }

bool clause_satisfied(const PropClause& clause, const Assignment& assignment) {
  for (int l : clause.lits) {
    auto a = static_cast<std::size_t>(std::abs(l));
    if (a < assignment.size() && assignment[a] == (l > 0 ? 1 : -1)) return true;
  }
  return false;
}

}  // namespace aprel
