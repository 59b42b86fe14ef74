#include "aprel/distance.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "graph_walk.hpp"

namespace aprel {

std::uint32_t Distance::value() const {
  if (!finite()) throw Error("infinite distance has no value");
  return value_;
}

std::string Distance::to_string() const { return finite() ? std::to_string(value_) : "inf"; }

std::uint32_t clause_distance_from_edges(std::uint32_t edges, GraphMode mode) {
  return mode == GraphMode::first_order ? 1 + (edges + 1) / 2 : 1 + (edges + 2) / 3;
}

std::optional<std::uint32_t> edge_budget(std::uint32_t k, GraphMode mode) {
  if (k < 2) return std::nullopt;
  return mode == GraphMode::first_order ? 2 * k - 3 : 3 * k - 4;
}

DistanceMap::DistanceMap(std::shared_ptr<const LinkIndex> index, GraphMode mode,
                         std::vector<ClauseId> support, std::optional<std::uint32_t> bound,
                         std::vector<std::uint32_t> node_distance,
                         std::vector<NodeId> predecessor)
    : index_(std::move(index)),
      mode_(mode),
      support_(std::move(support)),
      bound_(bound),
      node_distance_(std::move(node_distance)),
      predecessor_(std::move(predecessor)) {
  const auto& set = index_->clauses();
  clause_distance_.assign(set.size(), Distance::infinite());
  in_support_.assign(set.size(), false);
  for (ClauseId id : support_) in_support_[*set.position(id)] = true;
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    if (in_support_[pos]) {
      clause_distance_[pos] = Distance(1);
      continue;
    }
    OccId first = index_->first_occurrence(pos);
    OccId last = first + static_cast<OccId>(index_->clause_size(pos));
    for (OccId o = first; o < last; ++o) {
      auto e = node_distance_[nodes::in(o)];
      if (e == kUnreached) continue;
      Distance d(clause_distance_from_edges(e, mode_));
      if (bound_ && !(d <= *bound_)) continue;
      clause_distance_[pos] = std::min(clause_distance_[pos], d);
    }
  }
  materialized_ = static_cast<std::size_t>(
      std::count_if(node_distance_.begin(), node_distance_.end(),
                    [](std::uint32_t e) { return e != kUnreached; }));
}

Distance DistanceMap::distance(ClauseId id) const {
  auto pos = clauses().position(id);
  if (!pos) throw Error("unknown clause id " + std::to_string(id));
  return clause_distance_[*pos];
}

std::vector<ClauseId> DistanceMap::within(std::uint32_t n) const {
  std::vector<ClauseId> out;
  for (std::size_t pos = 0; pos < clause_distance_.size(); ++pos) {
    if (clause_distance_[pos] <= n) out.push_back(clauses()[pos].id());
  }
  return out;
}

std::uint32_t DistanceMap::max_finite() const {
  std::uint32_t best = 0;
  for (auto d : clause_distance_) {
    if (d.finite()) best = std::max(best, d.value());
  }
  return best;
}

std::optional<std::uint32_t> DistanceMap::node_distance(NodeId n) const {
  if (n >= node_distance_.size() || node_distance_[n] == kUnreached) return std::nullopt;
  return node_distance_[n];
}

std::optional<NodeId> DistanceMap::predecessor(NodeId n) const {
  if (n >= predecessor_.size() || predecessor_[n] == kUnreached) return std::nullopt;
  return predecessor_[n];
}

void DistanceMap::write_csv(std::ostream& out) const {
  out << "clause_id,distance\n";
  for (std::size_t pos = 0; pos < clause_distance_.size(); ++pos) {
    out << clauses()[pos].id() << ',' << clause_distance_[pos].to_string() << '\n';
  }
}

namespace {

std::vector<ClauseId> checked_support(const ClauseSet& set, std::span<const ClauseId> support) {
  auto ids = normalize_ids({support.begin(), support.end()});
  for (ClauseId id : ids) {
    if (!set.contains(id)) throw Error("unknown clause id " + std::to_string(id) + " in support");
  }
  return ids;
}

/// Breadth-first search from the support's out-nodes. Nodes at edge
/// distance ≥ `expand_limit` are recorded but not expanded.
template <class Successors>
DistanceMap search(std::shared_ptr<const LinkIndex> index, GraphMode mode,
                   std::vector<ClauseId> support, std::optional<std::uint32_t> bound,
                   std::uint64_t expand_limit, Successors&& successors) {
  constexpr auto kNone = DistanceMap::kUnreached;
  std::vector<std::uint32_t> dist(detail::node_count(*index, mode), kNone);
  std::vector<NodeId> pred(dist.size(), kNone);
  std::vector<NodeId> queue;
  const auto& set = index->clauses();
  for (ClauseId id : support) {
    auto pos = *set.position(id);
    OccId first = index->first_occurrence(pos);
    OccId last = first + static_cast<OccId>(index->clause_size(pos));
    for (OccId o = first; o < last; ++o) {
      dist[nodes::in(o)] = 0;
      dist[nodes::out(o)] = 0;
      queue.push_back(nodes::out(o));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId v = queue[head];
    std::uint32_t d = dist[v];
    if (d >= expand_limit) continue;
    successors(v, [&](NodeId w) {
      if (dist[w] != kNone) return;
      dist[w] = d + 1;
      pred[w] = v;
      queue.push_back(w);
    });
  }
  return DistanceMap(std::move(index), mode, std::move(support), bound, std::move(dist),
                     std::move(pred));
}

DistanceMap lazy_search(const std::shared_ptr<LinkIndex>& index, std::span<const ClauseId> support,
                        std::optional<std::uint32_t> k, GraphMode mode) {
  detail::require_hub_compatible(*index, mode);
  auto ids = checked_support(index->clauses(), support);
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  if (k) {
    auto budget = edge_budget(*k, mode);
    limit = budget ? *budget : 0;
  }
  LinkIndex& links = *index;
  return search(index, mode, std::move(ids), k, limit, [&](NodeId v, auto&& push) {
    detail::for_each_successor(links, mode, v, [&](NodeId w, bool) { push(w); });
  });
}

}  // namespace

DistanceMap bfs_from_support(const RelevanceGraph& graph, std::span<const ClauseId> support) {
  auto ids = checked_support(graph.clauses(), support);
  return search(graph.shared_index(), graph.mode(), std::move(ids), std::nullopt,
                std::numeric_limits<std::uint64_t>::max(), [&](NodeId v, auto&& push) {
                  for (NodeId w : graph.successors(v)) push(w);
                });
}

DistanceMap bounded_build_and_search(const ClauseSet& set, std::span<const ClauseId> support,
                                     std::uint32_t k, GraphMode mode) {
  return bounded_build_and_search(
      std::make_shared<LinkIndex>(std::make_shared<const ClauseSet>(set)), support, k, mode);
}

DistanceMap bounded_build_and_search(std::shared_ptr<LinkIndex> index,
                                     std::span<const ClauseId> support, std::uint32_t k,
                                     GraphMode mode) {
  if (k == 0) throw Error("distance bound must be at least 1");
  return lazy_search(index, support, k, mode);
}

ClauseSet relevant_set(const ClauseSet& set, std::span<const ClauseId> support, std::uint32_t n) {
  return relevant_set(set, support, n, default_mode(set));
}

ClauseSet relevant_set(const ClauseSet& set, std::span<const ClauseId> support, std::uint32_t n,
                       GraphMode mode) {
  if (n == 0) throw Error("relevance bound must be at least 1");
  auto map = bounded_build_and_search(set, support, n, mode);
  auto ids = map.within(n);
  return set.subset(ids);
}

ClauseSet multi_support_intersection(const ClauseSet& set,
                                     std::span<const std::vector<ClauseId>> supports,
                                     std::uint32_t n) {
  if (supports.empty()) throw Error("at least one support set is required");
  if (n == 0) throw Error("relevance bound must be at least 1");
  auto index = std::make_shared<LinkIndex>(std::make_shared<const ClauseSet>(set));
  auto mode = default_mode(set);
  std::vector<ClauseId> common;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (supports[i].empty()) throw Error("support set " + std::to_string(i + 1) + " is empty");
    auto ids = bounded_build_and_search(index, supports[i], n, mode).within(n);
    if (i == 0) {
      common = std::move(ids);
    } else {
      std::vector<ClauseId> kept;
      std::set_intersection(common.begin(), common.end(), ids.begin(), ids.end(),
                            std::back_inserter(kept));
      common = std::move(kept);
    }
  }
  return set.subset(common);
}

Distance relevance_distance(const ClauseSet& set, ClauseId from, ClauseId to) {
  if (!set.contains(to)) throw Error("unknown clause id " + std::to_string(to));
  auto index = std::make_shared<LinkIndex>(std::make_shared<const ClauseSet>(set));
  ClauseId support[] = {from};
  return lazy_search(index, support, std::nullopt, default_mode(set)).distance(to);
}

}  // namespace aprel
