#include "aprel/dpll.hpp"

#include <algorithm>
#include <cstdlib>

#include "solver_common.hpp"

namespace aprel {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::sat: return "sat";
    case Verdict::unsat: return "unsat";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

PropCnf cofactor(const PropCnf& q, int lit) {
  PropCnf out;
  out.num_atoms = q.num_atoms;
  out.clauses.reserve(q.clauses.size());
  for (const auto& c : q.clauses) {
    if (c.contains(lit)) continue;
    PropClause kept{c.id, {}};
    kept.lits.reserve(c.lits.size());
    for (int l : c.lits) {
      if (l != -lit) kept.lits.push_back(l);
    }
    out.clauses.push_back(std::move(kept));
  }
  return out;
}

ClauseSet cofactor(const ClauseSet& q, const Literal& lit) {
  if (!lit.is_ground()) throw Error("cofactor literal must be ground");
  auto complement = negate(lit);
  ClauseSet out = q.empty_like();
  for (std::size_t pos = 0; pos < q.size(); ++pos) {
    const auto& c = q[pos];
    if (!c.is_ground()) throw Error("clause " + std::to_string(c.id()) + " is not ground");
    if (c.contains(lit)) continue;
    std::vector<Literal> kept;
    for (const auto& l : c.literals()) {
      if (!(l == complement)) kept.push_back(l);
    }
    out.add(make_clause(c.id(), std::move(kept), {}, q.symbols()), q.origin(pos));
  }
  return out;
}

int pick_atom(const PropCnf& q, const std::vector<int>& candidates, Heuristic heuristic) {
  if (candidates.empty()) throw Error("no candidate atoms to split on");
  if (heuristic == Heuristic::first_atom) return candidates.front();
  std::vector<std::size_t> count(static_cast<std::size_t>(q.num_atoms) + 1, 0);
  for (const auto& c : q.clauses) {
    for (int l : c.lits) ++count[static_cast<std::size_t>(std::abs(l))];
  }
  int best = candidates.front();
  for (int a : candidates) {
    if (count[static_cast<std::size_t>(a)] > count[static_cast<std::size_t>(best)]) best = a;
  }
  return best;
}

namespace detail {

int find_unit(const PropCnf& q, const std::function<bool(int)>& eligible) {
  for (const auto& c : q.clauses) {
    if (c.lits.size() == 1 && eligible(std::abs(c.lits[0]))) return c.lits[0];
  }
  return 0;
}

Assignment model_from_trail(int num_atoms, const std::vector<int>& trail) {
  Assignment model(static_cast<std::size_t>(num_atoms) + 1, 0);
  for (int l : trail) model[static_cast<std::size_t>(std::abs(l))] = l > 0 ? 1 : -1;
  return model;
}

Verdict PlainSearch::run(PropCnf q) {
  charge();
  ++*counter;
  auto mark = trail.size();
  while (true) {
    if (q.has_empty_clause()) {
      trail.resize(mark);
      return Verdict::unsat;
    }
    if (q.empty()) return Verdict::sat;
    if (config.units == UnitPolicy::off) break;
    int unit = find_unit(q, [](int) { return true; });
    if (unit == 0) break;
    ++stats.units;
    trail.push_back(unit);
    q = cofactor(q, unit);
  }
  int atom = pick_atom(q, q.atoms(), config.heuristic);
  int lit = config.positive_first ? atom : -atom;
  ++stats.splits;
  auto decision = trail.size();
  for (int branch : {lit, -lit}) {
    trail.push_back(branch);
    if (run(cofactor(q, branch)) == Verdict::sat) return Verdict::sat;
    trail.resize(decision);
  }
  trail.resize(mark);
  return Verdict::unsat;
}

}  // namespace detail

SolveResult dpll(const PropCnf& q, const SolverConfig& config) {
  SolveResult result;
  detail::PlainSearch search{config, result.stats, result.trail, &result.stats.calls};
  try {
    result.verdict = search.run(q);
  } catch (const detail::BudgetExhausted&) {
    result.verdict = Verdict::unknown;
    result.trail.clear();
    return result;
  }
  if (result.verdict == Verdict::sat) {
    result.model = detail::model_from_trail(q.num_atoms, result.trail);
  } else {
    result.trail.clear();
  }
  return result;
}

}  // namespace aprel
