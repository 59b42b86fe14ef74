#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aprel/distance.hpp"
#include "aprel/dpll.hpp"
#include "aprel/ground.hpp"

namespace aprel {

/// Atoms grouped by their smallest clause distance from the support:
/// bucket i holds the atoms first met at distance i + 1.
struct SteppingSequence {
  std::vector<std::vector<int>> buckets;

  /// Total number of atoms over all buckets.
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool contains(int atom) const;
  /// Atoms of the first nonempty bucket; empty when the sequence is.
  const std::vector<int>* leading_bucket() const;
};

/// Ground clause set prepared for the relevance solver: atom numbering,
/// propositional clauses and the support's distances.
struct RelevanceProblem {
  AtomTable atoms;
  PropCnf cnf;
  SteppingSequence steps;
};

/// Throws Error for sets with variables or support ids outside the set.
SteppingSequence stepping_sequence(const ClauseSet& set, std::span<const ClauseId> support);
SteppingSequence stepping_sequence(const DistanceMap& map, const AtomTable& atoms);
RelevanceProblem prepare_relevance(const ClauseSet& set, std::span<const ClauseId> support);

/// Every bucket intersected with the atoms of `t`.
SteppingSequence restrict(const SteppingSequence& steps, const PropCnf& t);

/// A literal of the first nonempty bucket, chosen by the heuristic and the
/// configured polarity. Throws Error on an empty sequence.
int leading_literal(const SteppingSequence& steps, const PropCnf& q, const SolverConfig& config);

/// When the stepping sequence runs out: `trusted` answers sat, assuming the
/// support is valid; `fallback` hands the remaining clauses to `dpll`.
enum class RelMode : std::uint8_t { trusted, fallback };

/// Splits only on atoms of the stepping sequence, nearest buckets first.
SolveResult dpll_rel(const PropCnf& q, const SteppingSequence& steps, RelMode mode,
                     const SolverConfig& config = {});

/// Smallest m whose relevant set R_m(U) is unsatisfiable, or infinite.
Distance support_radius(const ClauseSet& set, std::span<const ClauseId> support);

/// Three readings of "size" of a clause set.
struct NeighborhoodSize {
  std::size_t atoms = 0;
  std::size_t signed_literals = 0;
  std::size_t occurrences = 0;
};
NeighborhoodSize neighborhood_size(const ClauseSet& set);

/// The support's neighborhood R_rad(U) with its radius; the whole reachable
/// part when the radius is infinite.
struct SupportNeighborhood {
  Distance radius = Distance::infinite();
  std::vector<ClauseId> clauses;
  NeighborhoodSize size;
};
SupportNeighborhood support_neighborhood(const ClauseSet& set, std::span<const ClauseId> support);

}  // namespace aprel
