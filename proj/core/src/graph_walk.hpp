#pragma once

#include "aprel/relevance_graph.hpp"

namespace aprel::detail {

inline NodeId hub_node(const LinkIndex& index, std::uint32_t atom, bool positive) {
  return static_cast<NodeId>(2 * index.occurrence_count() + 2 * atom + (positive ? 0 : 1));
}

/// Calls `visit(successor, clause_edge)` for every successor of `n`, in
/// clause-id then literal order. Partner lists are pulled from `index`
/// on demand.
template <class Visit>
void for_each_successor(LinkIndex& index, GraphMode mode, NodeId n, Visit&& visit) {
  const auto occ_count = index.occurrence_count();
  if (n >= 2 * occ_count) {
    auto rel = n - 2 * occ_count;
    bool positive = rel % 2 == 0;
    // A hub without feeding occurrences is unreachable; give it no edges.
    if (index.atom_occurrences(rel / 2, positive).empty()) return;
    for (OccId q : index.atom_occurrences(rel / 2, !positive)) visit(nodes::in(q), false);
    return;
  }
  OccId o = nodes::occurrence(n);
  if (nodes::is_in(n)) {
    const auto& occ = index.occurrence(o);
    OccId first = index.first_occurrence(occ.clause_pos);
    OccId last = first + static_cast<OccId>(index.clause_size(occ.clause_pos));
    for (OccId q = first; q < last; ++q) {
      if (q != o) visit(nodes::out(q), true);
    }
    return;
  }
  if (mode == GraphMode::first_order) {
    for (OccId q : index.partners(o)) visit(nodes::in(q), false);
    return;
  }
  bool positive = index.literal(o).positive;
  auto atom = index.atom_of(o);
  if (!index.atom_occurrences(atom, !positive).empty()) {
    visit(hub_node(index, atom, positive), false);
  }
}

inline std::size_t node_count(const LinkIndex& index, GraphMode mode) {
  auto n = 2 * index.occurrence_count();
  if (mode == GraphMode::propositional_hub) n += 2 * index.atom_count();
  return n;
}

void require_hub_compatible(const LinkIndex& index, GraphMode mode);

}  // namespace aprel::detail
