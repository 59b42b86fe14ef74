#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aprel/syntax.hpp"

namespace aprel {

using Rng = std::mt19937_64;

/// Ground set with DIMACS-numbered atoms from signed-integer clauses. Ids
/// run 1..n. `num_atoms` only raises the declared variable count.
ClauseSet prop_set(const std::vector<std::vector<int>>& clauses, int num_atoms = 0);

/// Ground set with named zero-arity atoms, `~name` for negation.
ClauseSet named_set(const std::vector<std::vector<std::string>>& clauses);

struct GroundSetParams {
  std::size_t min_clauses = 1;
  std::size_t max_clauses = 8;
  std::size_t max_width = 3;
  int atoms = 4;
  /// Allow clauses of width 0.
  bool allow_empty = false;
};

/// Clauses of distinct atoms with uniform widths and signs.
ClauseSet random_ground_set(Rng& rng, const GroundSetParams& params);

/// Uniform random k-CNF: distinct atoms per clause, random signs.
ClauseSet random_ksat(Rng& rng, int vars, std::size_t clauses, std::size_t k = 3);

struct FirstOrderParams {
  std::size_t min_clauses = 1;
  std::size_t max_clauses = 6;
  std::size_t max_width = 3;
  std::size_t predicates = 2;  ///< p0.. with arity 1 or 2
  std::size_t functions = 1;   ///< unary f0..
  std::size_t constants = 2;   ///< a0..
  std::size_t variables = 2;   ///< X0.. per clause
  std::size_t max_depth = 2;   ///< term depth, constants and variables count 1
};

ClauseSet random_first_order_set(Rng& rng, const FirstOrderParams& params);

/// Ground set where every clause has at most `k` literals and each atom
/// occurs with a given sign in at most `b` clauses.
ClauseSet random_bounded_set(Rng& rng, std::size_t b, std::size_t k, std::size_t clauses, int atoms);

/// Horn goal tree: `~p`, then one rule per internal node whose body lists
/// its children, then a unit per leaf. `branching[i]` is the number of
/// children of each node on level i. Levels use letters p, q, r, ...
ClauseSet horn_tree(const std::vector<std::size_t>& branching);

/// `m` clauses `p | a_i` and `n` clauses `~p | b_j`.
ClauseSet hub_fixture(std::size_t m, std::size_t n);

/// Unsatisfiable random 3-CNF over `core_atoms` atoms plus a satisfiable
/// tail over `tail_atoms` fresh atoms in which every clause has a positive
/// literal. The all-negative clauses are a support confined to the core.
ClauseSet core_and_tail(Rng& rng, int core_atoms, int tail_atoms, std::size_t tail_clauses);

}  // namespace aprel
