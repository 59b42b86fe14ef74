#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aprel/relevance_graph.hpp"

namespace aprel {

/// A relevance distance: a positive integer or unreachable.
class Distance {
 public:
  static constexpr Distance infinite() noexcept { return Distance(); }
  constexpr explicit Distance(std::uint32_t value) noexcept : value_(value) {}

  constexpr bool finite() const noexcept { return value_ != kInf; }
  /// Throws Error when infinite.
  std::uint32_t value() const;
  /// `inf` or the decimal value.
  std::string to_string() const;

  constexpr bool operator<=(std::uint32_t n) const noexcept { return value_ <= n; }
  friend constexpr auto operator<=>(Distance, Distance) noexcept = default;

 private:
  static constexpr std::uint32_t kInf = UINT32_MAX;
  constexpr Distance() noexcept : value_(kInf) {}
  std::uint32_t value_;
};

/// Result of a breadth-first search from a support set: clause distances,
/// node distances (edge counts from the support's out-nodes) and
/// predecessor links.
///
/// A map produced by a bounded search only explores up to its bound; there
/// an infinite clause distance means "greater than `bound()`".
class DistanceMap {
 public:
  static constexpr std::uint32_t kUnreached = UINT32_MAX;

  DistanceMap(std::shared_ptr<const LinkIndex> index, GraphMode mode,
              std::vector<ClauseId> support, std::optional<std::uint32_t> bound,
              std::vector<std::uint32_t> node_distance, std::vector<NodeId> predecessor);

  GraphMode mode() const noexcept { return mode_; }
  const ClauseSet& clauses() const noexcept { return index_->clauses(); }
  const LinkIndex& index() const noexcept { return *index_; }
  const std::vector<ClauseId>& support() const noexcept { return support_; }
  std::optional<std::uint32_t> bound() const noexcept { return bound_; }

  /// Throws Error for ids outside the clause set.
  Distance distance(ClauseId id) const;
  Distance distance_at(std::size_t pos) const { return clause_distance_[pos]; }
  bool in_support(std::size_t pos) const { return in_support_[pos]; }
  /// Ids with distance ≤ n, ascending.
  std::vector<ClauseId> within(std::uint32_t n) const;
  /// Largest finite distance, 0 for an empty set.
  std::uint32_t max_finite() const;

  std::optional<std::uint32_t> node_distance(NodeId n) const;
  std::optional<NodeId> predecessor(NodeId n) const;
  /// Nodes the search assigned a distance to.
  std::size_t materialized_nodes() const noexcept { return materialized_; }

  /// `clause_id,distance` rows with `inf` for unreachable clauses.
  void write_csv(std::ostream& out) const;

 private:
  std::shared_ptr<const LinkIndex> index_;
  GraphMode mode_;
  std::vector<ClauseId> support_;
  std::optional<std::uint32_t> bound_;
  std::vector<std::uint32_t> node_distance_;
  std::vector<NodeId> predecessor_;
  std::vector<Distance> clause_distance_;
  std::vector<bool> in_support_;
  std::size_t materialized_ = 0;
};

/// Clause distance implied by an in-node reached after `edges` edges.
std::uint32_t clause_distance_from_edges(std::uint32_t edges, GraphMode mode);
/// Largest in-node edge count that still yields a clause distance ≤ k.
std::optional<std::uint32_t> edge_budget(std::uint32_t k, GraphMode mode);

/// Full search over an already built graph. Throws Error for ids outside
/// the graph's clause set.
DistanceMap bfs_from_support(const RelevanceGraph& graph, std::span<const ClauseId> support);

/// Builds only the part of the graph within distance k of the support,
/// unifying literals as the frontier reaches them. Distances ≤ k agree with
/// `bfs_from_support`.
DistanceMap bounded_build_and_search(const ClauseSet& set, std::span<const ClauseId> support,
                                     std::uint32_t k, GraphMode mode);
DistanceMap bounded_build_and_search(std::shared_ptr<LinkIndex> index,
                                     std::span<const ClauseId> support, std::uint32_t k,
                                     GraphMode mode);

/// Clauses at distance ≤ n from the support, ids preserved. Throws Error for
/// n = 0.
ClauseSet relevant_set(const ClauseSet& set, std::span<const ClauseId> support, std::uint32_t n);
ClauseSet relevant_set(const ClauseSet& set, std::span<const ClauseId> support, std::uint32_t n,
                       GraphMode mode);

/// Intersection of the relevant sets of every support. Throws Error for an
/// empty list or an empty support.
ClauseSet multi_support_intersection(const ClauseSet& set,
                                     std::span<const std::vector<ClauseId>> supports,
                                     std::uint32_t n);

/// Length of the shortest alternating path from `from` to `to`.
Distance relevance_distance(const ClauseSet& set, ClauseId from, ClauseId to);

}  // namespace aprel
