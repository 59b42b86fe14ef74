#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aprel/distance.hpp"
#include "aprel/syntax.hpp"

namespace aprel {

/// A link from literal `exit` of one clause to literal `entry` of the next.
struct PathLink {
  std::size_t exit = 0;
  std::size_t entry = 0;

  friend bool operator==(const PathLink&, const PathLink&) = default;
};

/// Clauses C1..Cn joined by n-1 links; its length counts clauses only.
struct AlternatingPath {
  std::vector<ClauseId> clauses;
  std::vector<PathLink> links;

  std::size_t length() const noexcept { return clauses.size(); }
  ClauseId front() const { return clauses.front(); }
  ClauseId back() const { return clauses.back(); }
  AlternatingPath reversed() const;

  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

struct PathCheck {
  bool valid = false;
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks every link: literals exist, are complementary unifiable, and no
/// inner clause is left through the literal it was entered by.
PathCheck validate_path(const ClauseSet& set, const AlternatingPath& path);

/// Builds a path from literal pairs, locating each literal in its clause.
/// Throws Error when a literal is missing from the clause it is attached to.
AlternatingPath path_from_literals(const ClauseSet& set, const std::vector<ClauseId>& clauses,
                                   const std::vector<std::pair<Literal, Literal>>& links);

/// A shortest path from the support to `id`, read off the predecessor
/// links. Throws Error when the clause is unreachable.
AlternatingPath witness_path(const DistanceMap& map, ClauseId id);

/// `1 -[p ~ ~p]-> 2 -[q ~ ~q]-> 3`
std::string format_path(const ClauseSet& set, const AlternatingPath& path);

}  // namespace aprel
