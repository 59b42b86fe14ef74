#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aprel/alternating_path.hpp"
#include "aprel/distance.hpp"
#include "aprel/ground.hpp"

namespace aprel {

/// (a \ {atom}) ∪ (b \ {¬atom}) when `atom` is positive in one parent and
/// negative in the other (either order). Throws Error otherwise.
PropClause resolve(const PropClause& a, const PropClause& b, int atom);

struct ResolutionStep {
  /// For input steps `clause.id` is the id in the source set; derived
  /// clauses carry id 0.
  PropClause clause;
  /// 1-based indices of the parents; absent for input clauses.
  std::optional<std::pair<std::size_t, std::size_t>> parents;
  int atom = 0;
  bool supported = false;

  bool is_input() const noexcept { return !parents.has_value(); }
};

struct ResolutionSequence {
  std::vector<ResolutionStep> steps;

  std::size_t size() const noexcept { return steps.size(); }
  std::size_t resolutions() const;
  bool refutes() const { return !steps.empty() && steps.back().clause.empty(); }
  /// Ids of the input clauses in order of appearance.
  std::vector<ClauseId> input_ids() const;
};

/// Checks inputs against `set`, resolvents against their parents and the
/// supported flags against `support`; with `require_sos` every derived
/// clause must be supported.
PathCheck validate_sequence(const ResolutionSequence& seq, const PropCnf& set,
                            std::span<const ClauseId> support, bool require_sos = true);

struct SosLimits {
  std::size_t max_clauses = 100000;
  std::size_t max_levels = 50;
  /// Drop resolvents subsumed by a supported clause. Off means exact
  /// duplicates only.
  bool forward_subsumption = false;
};

enum class SosStatus : std::uint8_t { refuted, saturated, limit };
std::string_view sos_status_name(SosStatus s);

struct SosOutcome {
  SosStatus status = SosStatus::limit;
  /// The refutation when `status == refuted`.
  ResolutionSequence proof;
  std::size_t levels = 0;
  std::size_t derived = 0;
};

/// Breadth-first level saturation where every resolvent has a supported
/// parent. Tautologies and duplicates are dropped.
SosOutcome sos_refute(const PropCnf& set, std::span<const ClauseId> support,
                      const SosLimits& limits = {});

/// True iff every input clause at 1-based position i of the sequence lies
/// within distance i of the support. Throws Error for sequences that are
/// not valid set-of-support sequences from `set`.
bool verify_support_path_property(const ResolutionSequence& seq, const PropCnf& set,
                                  std::span<const ClauseId> support, const DistanceMap& map);

/// Lines `i. <clause>  [input|resolve(j,k) on <atom>]  supported=<bool>`,
/// with atoms named through `atoms` in the style of `source`.
void write_refutation(std::ostream& out, const ResolutionSequence& seq, const ClauseSet& source,
                      const AtomTable& atoms);
std::string format_prop_clause(const PropClause& clause, const ClauseSet& source,
                               const AtomTable& atoms);

/// Set-of-support search against positive hyper-resolution on a Horn set
/// whose support is its goal clauses.
struct HyperReport {
  bool sos_refuted = false;
  std::size_t sos_length = 0;  ///< resolutions in the shortest linear proof
  std::size_t sos_depth = 0;   ///< longest chain of resolvents in that proof
  ResolutionSequence sos_proof;
  bool hyper_refuted = false;
  std::size_t hyper_levels = 0;
  /// Largest distance from the support among the input clauses of the proof.
  Distance max_distance = Distance::infinite();
  std::string text;
};

/// Throws Error for non-Horn sets, non-ground sets or a support containing
/// a clause with a positive literal.
HyperReport hyper_depth_demo(const ClauseSet& set, std::span<const ClauseId> support,
                             std::size_t max_length = 64);

}  // namespace aprel
