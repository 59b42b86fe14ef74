#pragma once

// Independent reference implementations used to check the library.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "aprel/distance.hpp"
#include "aprel/ground.hpp"
#include "aprel/sos.hpp"
#include "aprel/syntax.hpp"

namespace oracle {

using aprel::ClauseId;
using aprel::ClauseSet;
using aprel::Distance;
using aprel::Literal;
using aprel::PropCnf;
using aprel::Term;

/// Unifiability of `a` and `b` with b's variables renamed apart, by
/// substitution application and occurs check.
bool unifiable_apart(const Term& a, const Term& b);
bool complementary(const Literal& l, const Literal& m);

/// Shortest alternating path lengths from the support, enumerated level by
/// level over (clause, entry literal) states up to `max_length` clauses.
/// Indexed by clause position.
std::vector<Distance> path_distances(const ClauseSet& set, std::span<const ClauseId> support,
                                     std::size_t max_length);
std::vector<Distance> path_distances(const ClauseSet& set, std::span<const ClauseId> support);

/// Pairwise distances by the same enumeration; [i][j] from position i to j.
std::vector<std::vector<Distance>> all_pairs(const ClauseSet& set);
bool relevance_connected(const ClauseSet& set);

/// Truth-table satisfiability.
bool satisfiable(const PropCnf& cnf);
bool satisfiable(const ClauseSet& set);
/// True iff every model of `premises` satisfies `clause`.
bool entails(const PropCnf& premises, const aprel::PropClause& clause);

/// Every clause over atoms 1..n with at most one literal per atom, the
/// empty clause first.
std::vector<std::vector<int>> clause_space(int atoms);

/// Minimal unsatisfiable subsets as ascending position lists (≤ 20 clauses).
std::vector<std::vector<std::size_t>> minimal_unsat_subsets(const PropCnf& cnf);

/// Ground terms over the function symbols occurring in the set
/// with depth ≤ `depth`.
std::vector<Term> herbrand_terms(const ClauseSet& set, std::size_t depth);
/// Printed ground instances of the clauses with variables ranging over
/// terms of depth ≤ `depth`; variables named `_sv...` (introduced by
/// splitting) range over depth ≤ `depth - 1`.
std::set<std::string> ground_instances(const ClauseSet& set, std::span<const ClauseId> ids,
                                       std::size_t depth);
/// Distinct ground instances whose atom arguments all have depth ≤ `depth`.
ClauseSet ground_to_depth(const ClauseSet& set, std::size_t depth);

/// Linear set-of-support sequences with inputs appended one at a time:
/// is there one of at most `max_steps` steps using `target` as an input?
std::optional<aprel::ResolutionSequence> sos_sequence_using(const PropCnf& cnf,
                                                            std::span<const ClauseId> support,
                                                            ClauseId target, std::size_t max_steps);

}  // namespace oracle
