#include "aprel/dpll_rel.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "solver_common.hpp"

namespace aprel {

std::size_t SteppingSequence::size() const noexcept {
  std::size_t n = 0;
  for (const auto& b : buckets) n += b.size();
  return n;
}

bool SteppingSequence::contains(int atom) const {
  return std::any_of(buckets.begin(), buckets.end(), [&](const std::vector<int>& b) {
    return std::binary_search(b.begin(), b.end(), atom);
  });
}

const std::vector<int>* SteppingSequence::leading_bucket() const {
  for (const auto& b : buckets) {
    if (!b.empty()) return &b;
  }
  return nullptr;
}

SteppingSequence stepping_sequence(const DistanceMap& map, const AtomTable& atoms) {
  const auto& set = map.clauses();
  std::vector<std::uint32_t> nearest(static_cast<std::size_t>(atoms.size()) + 1, 0);
  std::uint32_t deepest = 0;
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    auto d = map.distance_at(pos);
    if (!d.finite()) continue;
    for (const auto& l : set[pos].literals()) {
      auto& slot = nearest[static_cast<std::size_t>(atoms.id(l.atom))];
      if (slot == 0 || d.value() < slot) slot = d.value();
    }
  }
  for (auto d : nearest) deepest = std::max(deepest, d);
  SteppingSequence steps;
  steps.buckets.resize(deepest);
  for (int a = 1; a <= atoms.size(); ++a) {
    if (auto d = nearest[static_cast<std::size_t>(a)]; d != 0) steps.buckets[d - 1].push_back(a);
  }
  return steps;
}

RelevanceProblem prepare_relevance(const ClauseSet& set, std::span<const ClauseId> support) {
  RelevanceProblem problem;
  problem.atoms = AtomTable::build(set);
  problem.cnf = to_prop(set, problem.atoms);
  auto graph = build_graph(set, GraphMode::propositional_hub);
  problem.steps = stepping_sequence(bfs_from_support(graph, support), problem.atoms);
  return problem;
}

SteppingSequence stepping_sequence(const ClauseSet& set, std::span<const ClauseId> support) {
  return prepare_relevance(set, support).steps;
}

SteppingSequence restrict(const SteppingSequence& steps, const PropCnf& t) {
  std::vector<char> present(static_cast<std::size_t>(t.num_atoms) + 1, 0);
  for (const auto& c : t.clauses) {
    for (int l : c.lits) {
      auto a = static_cast<std::size_t>(std::abs(l));
      if (a >= present.size()) present.resize(a + 1, 0);
      present[a] = 1;
    }
  }
  SteppingSequence out;
  out.buckets.reserve(steps.buckets.size());
  for (const auto& b : steps.buckets) {
    auto& kept = out.buckets.emplace_back();
    for (int a : b) {
      if (static_cast<std::size_t>(a) < present.size() && present[static_cast<std::size_t>(a)]) {
        kept.push_back(a);
      }
    }
  }
  return out;
}

int leading_literal(const SteppingSequence& steps, const PropCnf& q, const SolverConfig& config) {
  const auto* bucket = steps.leading_bucket();
  if (!bucket) throw Error("stepping sequence is empty");
  int atom = pick_atom(q, *bucket, config.heuristic);
  return config.positive_first ? atom : -atom;
}

namespace {

struct RelSearch {
  RelMode mode;
  const SolverConfig& config;
  SolveStats& stats;
  std::vector<int>& trail;

  Verdict run(PropCnf q, SteppingSequence steps) {
    detail::PlainSearch plain{config, stats, trail, &stats.fallback_calls};
    plain.charge();
    ++stats.calls;
    auto mark = trail.size();
    while (true) {
      if (q.has_empty_clause()) {
        trail.resize(mark);
        return Verdict::unsat;
      }
      if (q.empty()) return Verdict::sat;
      if (config.units == UnitPolicy::off) break;
      int unit = detail::find_unit(q, [&](int atom) {
        return config.units == UnitPolicy::all || steps.contains(atom);
      });
      if (unit == 0) break;
      ++stats.units;
      trail.push_back(unit);
      q = cofactor(q, unit);
      steps = restrict(steps, q);
    }
    if (steps.empty()) {
      if (mode == RelMode::trusted) return Verdict::sat;
      auto v = plain.run(std::move(q));
      if (v == Verdict::unsat) trail.resize(mark);
      return v;
    }
    int lit = leading_literal(steps, q, config);
    ++stats.splits;
    auto decision = trail.size();
    for (int branch : {lit, -lit}) {
      trail.push_back(branch);
      auto next = cofactor(q, branch);
      auto next_steps = restrict(steps, next);
      if (next_steps.size() >= steps.size()) ++stats.metric_violations;
      if (run(std::move(next), std::move(next_steps)) == Verdict::sat) return Verdict::sat;
      trail.resize(decision);
    }
    trail.resize(mark);
    return Verdict::unsat;
  }
};

}  // namespace

SolveResult dpll_rel(const PropCnf& q, const SteppingSequence& steps, RelMode mode,
                     const SolverConfig& config) {
  SolveResult result;
  RelSearch search{mode, config, result.stats, result.trail};
  try {
    result.verdict = search.run(q, restrict(steps, q));
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

namespace {

struct RadiusScan {
  DistanceMap map;
  Distance radius = Distance::infinite();
};

RadiusScan scan_radius(const ClauseSet& set, std::span<const ClauseId> support) {
  auto atoms = AtomTable::build(set);
  auto graph = build_graph(set, GraphMode::propositional_hub);
  RadiusScan scan{bfs_from_support(graph, support)};
  for (std::uint32_t m = 1; m <= scan.map.max_finite(); ++m) {
    auto ids = scan.map.within(m);
    auto cnf = to_prop(set.subset(ids), atoms);
    if (dpll(cnf).verdict == Verdict::unsat) {
      scan.radius = Distance(m);
      break;
    }
  }
  return scan;
}

}  // namespace

Distance support_radius(const ClauseSet& set, std::span<const ClauseId> support) {
  return scan_radius(set, support).radius;
}

NeighborhoodSize neighborhood_size(const ClauseSet& set) {
  std::set<Term> atoms;
  std::set<std::pair<bool, Term>> literals;
  NeighborhoodSize size;
  for (const auto& c : set) {
    for (const auto& l : c.literals()) {
      atoms.insert(l.atom);
      literals.emplace(l.positive, l.atom);
      ++size.occurrences;
    }
  }
  size.atoms = atoms.size();
  size.signed_literals = literals.size();
  return size;
}

SupportNeighborhood support_neighborhood(const ClauseSet& set, std::span<const ClauseId> support) {
  auto scan = scan_radius(set, support);
  SupportNeighborhood out;
  out.radius = scan.radius;
  out.clauses = scan.map.within(scan.radius.finite() ? scan.radius.value() : scan.map.max_finite());
  out.size = neighborhood_size(set.subset(out.clauses));
  return out;
}

}  // namespace aprel
