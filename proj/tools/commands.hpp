#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aprel/dpll.hpp"
#include "aprel/relevance_graph.hpp"
#include "aprel/sos.hpp"
#include "aprel/syntax.hpp"

namespace aprel::cli {

enum class InputFormat : std::uint8_t { automatic, dimacs, tptp };

/// Exit statuses shared by `solve` and `deepen`.
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitUnknown = 0;
inline constexpr int kExitError = 1;

/// Everything a subcommand may read. Unused fields are ignored.
struct RunConfig {
  std::filesystem::path input;
  InputFormat format = InputFormat::automatic;
  /// `roles:negated_conjecture`, `polarity:all_negative`,
  /// `polarity:all_positive`, `ids:<list>` or `file:<path>`. Empty means the
  /// default for the input format. Several specs are only meaningful with
  /// `intersect`.
  std::vector<std::string> supports;
  std::optional<std::uint32_t> bound;
  std::optional<GraphMode> mode;
  bool trusted = false;
  UnitPolicy units = UnitPolicy::relevant_only;
  bool purity = false;
  bool intersect = false;
  bool drop_tautologies = false;
  bool no_relevance = false;
  bool count_calls = false;
  bool json = false;
  std::filesystem::path output;
  std::optional<std::uint64_t> max_calls;
  SosLimits sos;
  bool proof = false;

  // distance, path
  bool pairs = false;
  std::optional<ClauseId> target;
  std::optional<ClauseId> source_clause;

  // split
  std::optional<ClauseId> split_clause;
  std::string split_variable;
  bool binary_split = false;
  std::vector<std::string> extra_constants;

  // deepen
  std::uint64_t slice_calls = 1000;
  std::string prover;
  double prover_timeout = 10.0;
  std::optional<std::uint32_t> max_level;

  // gen
  std::string family;
  std::uint64_t seed = 1;
  int vars = 30;
  std::size_t clauses = 128;
  std::size_t width = 3;
  std::size_t b = 2;
  std::vector<std::size_t> branching;
  int tail_atoms = 40;
  std::size_t hub_m = 50;
  std::size_t hub_p = 50;
  InputFormat output_format = InputFormat::automatic;
};

/// The streams a command writes to.
struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Input loading. `APREL_TPTP_DIR` overrides the include base, which
/// otherwise is the directory of the including file. `-` reads stdin.
ClauseSet load_input(const std::filesystem::path& path, InputFormat format);

/// Negated conjectures when a TPTP input has any, else the all-negative
/// clauses.
std::string default_support_spec(const ClauseSet& set);

/// Resolves one support spec against `set`. Throws Error for unknown specs,
/// unknown ids or an empty result.
std::vector<ClauseId> resolve_support(const ClauseSet& set, const std::string& spec);

int cmd_filter(const RunConfig& config, Streams io);
int cmd_solve(const RunConfig& config, Streams io);
int cmd_deepen(const RunConfig& config, Streams io);
int cmd_distance(const RunConfig& config, Streams io);
int cmd_path(const RunConfig& config, Streams io);
int cmd_split(const RunConfig& config, Streams io);
int cmd_radius(const RunConfig& config, Streams io);
int cmd_stats(const RunConfig& config, Streams io);
int cmd_gen(const RunConfig& config, Streams io);

/// SZS status of an external prover's output: `Theorem` and
/// `Unsatisfiable` map to unsat, `Satisfiable` to sat, anything else
/// (including `Timeout`) to unknown.
Verdict parse_szs_status(const std::string& output);

/// Fills `{file}` and `{timeout}` in an external prover command template.
std::string expand_prover_command(const std::string& pattern, const std::string& file,
                                  double timeout);

}  // namespace aprel::cli
