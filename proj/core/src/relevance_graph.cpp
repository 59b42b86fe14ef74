#include "aprel/relevance_graph.hpp"

#include "graph_walk.hpp"

namespace aprel {

std::string_view mode_name(GraphMode mode) {
  return mode == GraphMode::first_order ? "first_order" : "propositional_hub";
}

GraphMode default_mode(const ClauseSet& set) {
  return set.is_ground() ? GraphMode::propositional_hub : GraphMode::first_order;
}

namespace detail {

void require_hub_compatible(const LinkIndex& index, GraphMode mode) {
  if (mode == GraphMode::propositional_hub && !index.ground()) {
    throw Error("propositional hub mode requires a clause set without variables");
  }
}

}  // namespace detail

RelevanceGraph::RelevanceGraph(std::shared_ptr<LinkIndex> index, GraphMode mode)
    : index_(std::move(index)), mode_(mode) {
  detail::require_hub_compatible(*index_, mode_);
  if (mode_ == GraphMode::first_order) index_->compute_all();
  auto n = detail::node_count(*index_, mode_);
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  for (NodeId v = 0; v < n; ++v) {
    detail::for_each_successor(*index_, mode_, v, [&](NodeId w, bool clause_edge) {
      targets_.push_back(w);
      if (clause_edge) ++clause_edges_;
    });
    offsets_.push_back(static_cast<std::uint32_t>(targets_.size()));
  }
}

GraphNode describe_node(const LinkIndex& index, NodeId n) {
  auto occ_nodes = 2 * index.occurrence_count();
  if (n >= occ_nodes) {
    auto rel = n - occ_nodes;
    bool positive = rel % 2 == 0;
    auto atom = static_cast<std::uint32_t>(rel / 2);
    auto occs = index.atom_occurrences(atom, positive);
    if (occs.empty()) occs = index.atom_occurrences(atom, !positive);
    Literal l = index.literal(occs.front());
    l.positive = positive;
    return {NodeKind::hub, std::move(l), std::nullopt};
  }
  OccId o = nodes::occurrence(n);
  return {nodes::is_in(n) ? NodeKind::in : NodeKind::out, index.literal(o), index.clause_id(o)};
}

GraphNode RelevanceGraph::node(NodeId n) const { return describe_node(*index_, n); }

RelevanceGraph build_graph(const ClauseSet& set, GraphMode mode) {
  return build_graph(std::make_shared<LinkIndex>(std::make_shared<const ClauseSet>(set)), mode);
}

RelevanceGraph build_graph(std::shared_ptr<LinkIndex> index, GraphMode mode) {
  return RelevanceGraph(std::move(index), mode);
}

}  // namespace aprel
