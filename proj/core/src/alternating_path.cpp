#include "aprel/alternating_path.hpp"

#include <algorithm>

#include "aprel/unify.hpp"

namespace aprel {

AlternatingPath AlternatingPath::reversed() const {
  AlternatingPath r;
  r.clauses.assign(clauses.rbegin(), clauses.rend());
  for (auto it = links.rbegin(); it != links.rend(); ++it) r.links.push_back({it->entry, it->exit});
  return r;
}

PathCheck validate_path(const ClauseSet& set, const AlternatingPath& path) {
  auto fail = [](std::string why) { return PathCheck{false, std::move(why)}; };
  if (path.clauses.empty()) return fail("path has no clauses");
  if (path.links.size() + 1 != path.clauses.size()) {
    return fail("path with " + std::to_string(path.clauses.size()) + " clauses needs " +
                std::to_string(path.clauses.size() - 1) + " links");
  }
  for (ClauseId id : path.clauses) {
    if (!set.contains(id)) return fail("unknown clause id " + std::to_string(id));
  }
  for (std::size_t i = 0; i < path.links.size(); ++i) {
    const auto& from = set.at(path.clauses[i]);
    const auto& to = set.at(path.clauses[i + 1]);
    const auto& link = path.links[i];
    if (link.exit >= from.size()) {
      return fail("link " + std::to_string(i + 1) + " leaves clause " +
                  std::to_string(from.id()) + " through a missing literal");
    }
    if (link.entry >= to.size()) {
      return fail("link " + std::to_string(i + 1) + " enters clause " + std::to_string(to.id()) +
                  " through a missing literal");
    }
    if (!complementary_unifiable(from[link.exit], to[link.entry])) {
      return fail("link " + std::to_string(i + 1) + " joins literals that are not complementary unifiable");
    }
    if (i > 0 && path.links[i - 1].entry == link.exit) {
      return fail("clause " + std::to_string(from.id()) + " at position " + std::to_string(i + 1) +
                  " is left through the literal it was entered by");
    }
  }
  return {true, ""};
}

AlternatingPath path_from_literals(const ClauseSet& set, const std::vector<ClauseId>& clauses,
                                   const std::vector<std::pair<Literal, Literal>>& links) {
  if (links.size() + 1 != clauses.size()) throw Error("link count must be one less than clause count");
  AlternatingPath path{clauses, {}};
  for (std::size_t i = 0; i < links.size(); ++i) {
    auto exit = set.at(clauses[i]).index_of(links[i].first);
    auto entry = set.at(clauses[i + 1]).index_of(links[i].second);
    if (!exit || !entry) throw Error("link " + std::to_string(i + 1) + " names a literal outside its clause");
    path.links.push_back({*exit, *entry});
  }
  return path;
}

AlternatingPath witness_path(const DistanceMap& map, ClauseId id) {
  const auto& set = map.clauses();
  const auto& index = map.index();
  auto pos = set.position(id);
  if (!pos) throw Error("unknown clause id " + std::to_string(id));
  if (!map.distance_at(*pos).finite()) {
    throw Error("clause " + std::to_string(id) + " is unreachable from the support; no witness");
  }
  if (map.in_support(*pos)) return AlternatingPath{{id}, {}};

  // Entry node of the target with the smallest edge count.
  OccId first = index.first_occurrence(*pos);
  NodeId node = 0;
  std::uint32_t best = DistanceMap::kUnreached;
  for (OccId o = first; o < first + index.clause_size(*pos); ++o) {
    auto e = map.node_distance(nodes::in(o));
    if (e && *e < best) {
      best = *e;
      node = nodes::in(o);
    }
  }

  std::vector<ClauseId> clauses{id};
  std::vector<PathLink> links;
  while (true) {
    // `node` is an in-node; walk back to the out-node that linked into it.
    OccId entry = nodes::occurrence(node);
    NodeId prev = *map.predecessor(node);
    if (prev >= 2 * index.occurrence_count()) prev = *map.predecessor(prev);  // hub
    OccId exit = nodes::occurrence(prev);
    links.push_back({index.occurrence(exit).literal, index.occurrence(entry).literal});
    clauses.push_back(index.clause_id(exit));
    auto before = map.predecessor(prev);
    if (!before) break;  // out-node of a support clause
    node = *before;
  }
  std::reverse(clauses.begin(), clauses.end());
  std::reverse(links.begin(), links.end());
  return AlternatingPath{std::move(clauses), std::move(links)};
}

std::string format_path(const ClauseSet& set, const AlternatingPath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.clauses.size(); ++i) {
    if (i > 0) {
      const auto& link = path.links[i - 1];
      const auto& from = set.at(path.clauses[i - 1]);
      const auto& to = set.at(path.clauses[i]);
      out += " -[" + set.literal_text(from, from[link.exit]) + " ~ " +
             set.literal_text(to, to[link.entry]) + "]-> ";
    }
    out += std::to_string(path.clauses[i]);
  }
  return out;
}

}  // namespace aprel
