#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "aprel/syntax.hpp"

namespace aprel {

using OccId = std::uint32_t;

/// One literal occurrence: position of the clause in the set and index of the
/// literal within the clause.
struct Occurrence {
  std::uint32_t clause_pos = 0;
  std::uint32_t literal = 0;
};

/// Literal occurrences of a clause set plus their complementary-unifiable
/// partners. Partner lists are computed on first request and cached; each
/// unordered non-ground pair is unified at most once.
///
/// Lazily filled caches make this class unsafe to share between threads
/// until every partner list has been computed (see `compute_all`).
class LinkIndex {
 public:
  explicit LinkIndex(std::shared_ptr<const ClauseSet> set);

  const ClauseSet& clauses() const noexcept { return *set_; }
  const std::shared_ptr<const ClauseSet>& shared_clauses() const noexcept { return set_; }

  std::size_t occurrence_count() const noexcept { return occurrences_.size(); }
  const Occurrence& occurrence(OccId o) const { return occurrences_[o]; }
  OccId first_occurrence(std::size_t clause_pos) const { return offsets_[clause_pos]; }
  std::size_t clause_size(std::size_t clause_pos) const {
    return offsets_[clause_pos + 1] - offsets_[clause_pos];
  }
  const Literal& literal(OccId o) const;
  ClauseId clause_id(OccId o) const { return (*set_)[occurrences_[o].clause_pos].id(); }

  /// Partners of `o` in ascending occurrence order.
  std::span<const OccId> partners(OccId o);
  void compute_all();

  /// Ground atom classes, used for hub nodes. Only defined for ground sets.
  bool ground() const noexcept { return ground_; }
  std::size_t atom_count() const noexcept { return atom_occurrences_.size(); }
  std::uint32_t atom_of(OccId o) const { return occ_atom_[o]; }
  /// Ground occurrences of atom class `atom` with the given sign, ascending.
  std::span<const OccId> atom_occurrences(std::uint32_t atom, bool positive) const {
    return atom_occurrences_[atom][positive ? 0 : 1];
  }

  std::size_t unification_tests() const noexcept { return unification_tests_; }

 private:
  bool linked(OccId a, OccId b);

  std::shared_ptr<const ClauseSet> set_;
  std::vector<Occurrence> occurrences_;
  std::vector<OccId> offsets_;
  bool ground_ = true;

  // Candidates share the predicate and have the opposite sign.
  std::unordered_map<SymbolId, std::array<std::vector<OccId>, 2>> by_predicate_;
  std::unordered_map<SymbolId, std::array<std::vector<OccId>, 2>> nonground_by_predicate_;
  std::vector<std::uint32_t> occ_atom_;  // ground atom class, or UINT32_MAX
  std::vector<std::array<std::vector<OccId>, 2>> atom_occurrences_;

  std::vector<std::optional<std::vector<OccId>>> partners_;
  std::unordered_map<std::uint64_t, bool> pair_cache_;
  std::size_t unification_tests_ = 0;
};

}  // namespace aprel
