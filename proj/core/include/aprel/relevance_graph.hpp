#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "aprel/link_index.hpp"
#include "aprel/syntax.hpp"

namespace aprel {

/// `first_order` links complementary-unifiable occurrences directly;
/// `propositional_hub` routes every link of a ground atom through one node
/// per signed atom, keeping the edge count linear.
enum class GraphMode : std::uint8_t { first_order, propositional_hub };

std::string_view mode_name(GraphMode mode);
/// Hub mode for ground sets, first-order otherwise.
GraphMode default_mode(const ClauseSet& set);

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { in, out, hub };

struct GraphNode {
  NodeKind kind = NodeKind::in;
  /// For hub nodes: the signed atom whose occurrences feed the hub.
  Literal literal;
  std::optional<ClauseId> clause;
};

/// Node numbering shared by the eager graph and the bounded search:
/// occurrence `o` owns `2o` (in) and `2o+1` (out); hub nodes follow, two per
/// ground atom class (positive, then negative).
namespace nodes {
constexpr NodeId in(OccId o) noexcept { return 2 * o; }
constexpr NodeId out(OccId o) noexcept { return 2 * o + 1; }
constexpr bool is_in(NodeId n) noexcept { return n % 2 == 0; }
constexpr OccId occurrence(NodeId n) noexcept { return n / 2; }
}  // namespace nodes

class RelevanceGraph {
 public:
  RelevanceGraph(std::shared_ptr<LinkIndex> index, GraphMode mode);

  GraphMode mode() const noexcept { return mode_; }
  const ClauseSet& clauses() const noexcept { return index_->clauses(); }
  const LinkIndex& index() const noexcept { return *index_; }
  const std::shared_ptr<LinkIndex>& shared_index() const noexcept { return index_; }

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size(); }
  /// Edges inside one clause (in → out).
  std::size_t clause_edge_count() const noexcept { return clause_edges_; }
  /// Edges between clauses: out → in, or out → hub → in.
  std::size_t link_edge_count() const noexcept { return targets_.size() - clause_edges_; }

  std::span<const NodeId> successors(NodeId n) const {
    return {targets_.data() + offsets_[n], targets_.data() + offsets_[n + 1]};
  }
  GraphNode node(NodeId n) const;
  bool is_hub(NodeId n) const noexcept { return n >= 2 * index_->occurrence_count(); }

 private:
  std::shared_ptr<LinkIndex> index_;
  GraphMode mode_;
  std::vector<std::uint32_t> offsets_;
  std::vector<NodeId> targets_;
  std::size_t clause_edges_ = 0;
};

/// Throws Error for hub mode on a set with variables.
RelevanceGraph build_graph(const ClauseSet& set, GraphMode mode);
RelevanceGraph build_graph(std::shared_ptr<LinkIndex> index, GraphMode mode);

/// Nodes of the graph as seen from either construction strategy.
GraphNode describe_node(const LinkIndex& index, NodeId n);

}  // namespace aprel
