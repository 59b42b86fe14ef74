#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <map>

#include "aprel/error.hpp"
#include "commands.hpp"

using namespace aprel;
using namespace aprel::cli;

namespace {

const std::map<std::string, InputFormat> kFormats{
    {"auto", InputFormat::automatic}, {"dimacs", InputFormat::dimacs}, {"tptp", InputFormat::tptp}};
const std::map<std::string, GraphMode> kModes{
    {"hub", GraphMode::propositional_hub}, {"first-order", GraphMode::first_order}};
const std::map<std::string, UnitPolicy> kUnits{
    {"off", UnitPolicy::off}, {"relevant", UnitPolicy::relevant_only}, {"all", UnitPolicy::all}};

/// Maps a word to an enum; the help shows the accepted words.
template <class T>
CLI::Validator choice(const std::map<std::string, T>& words) {
  std::string names;
  for (const auto& [word, value] : words) names += (names.empty() ? "" : "|") + word;
  return CLI::CheckedTransformer(words, CLI::ignore_case).description("{" + names + "}");
}

void add_input(CLI::App* app, RunConfig& config) {
  app->add_option("input", config.input, "Clause set file (DIMACS or TPTP CNF), - for stdin")->required();
  app->add_option("-f,--format", config.format, "Input format")
      ->transform(choice(kFormats))
      ->default_str("auto");
  app->add_flag("--drop-tautologies", config.drop_tautologies, "Remove clauses holding L and ~L");
  app->add_flag("--json", config.json, "Machine-readable summary on stdout");
}

void add_support(CLI::App* app, RunConfig& config) {
  app->add_option("-s,--support", config.supports,
                  "Support set: roles:negated_conjecture, polarity:all_negative, "
                  "polarity:all_positive, ids:1,2,... or file:<path> "
                  "(default: the negated conjectures of a TPTP input, else the all-negative clauses)");
}

void add_mode(CLI::App* app, RunConfig& config) {
  app->add_option("-m,--mode", config.mode, "Graph construction (default: hub for ground input)")
      ->transform(choice(kModes));
}

void add_output(CLI::App* app, RunConfig& config) {
  app->add_option("-o,--output", config.output, "Write the main output here instead of stdout");
}

void add_solver(CLI::App* app, RunConfig& config) {
  app->add_option("--units", config.units, "Unit clauses used before splitting")
      ->transform(choice(kUnits))
      ->default_str("relevant");
  app->add_option("--max-calls", config.max_calls, "Give up after this many recursive calls");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relevance filtering and solving by alternating-path distance from a support set"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "aprel 0.1.0");
  RunConfig config;
  std::function<int(const RunConfig&, Streams)> command;
  auto bind = [&](CLI::App* sub, int (*fn)(const RunConfig&, Streams)) {
    sub->callback([&command, fn] { command = fn; });
  };

  auto* filter = app.add_subcommand("filter", "Write the clauses within distance n of the support");
  add_input(filter, config);
  add_support(filter, config);
  add_mode(filter, config);
  add_output(filter, config);
  filter->add_option("-n,--bound", config.bound, "Distance bound n >= 1")->required();
  filter->add_flag("--purity", config.purity, "Drop pure clauses from the result");
  filter->add_flag("--intersect", config.intersect, "Intersect the relevant sets of all --support specs");
  bind(filter, cmd_filter);

  auto* solve = app.add_subcommand("solve", "Decide a ground set; exit 10 sat, 20 unsat, 0 unknown");
  add_input(solve, config);
  add_support(solve, config);
  add_solver(solve, config);
  add_output(solve, config);
  solve->add_flag("--trusted", config.trusted, "Answer sat once the relevant atoms run out (assumes a valid support)");
  solve->add_flag("--no-relevance", config.no_relevance, "Plain DPLL over all atoms");
  solve->add_flag("--count-calls", config.count_calls, "Report the support neighborhood and its 2^k call budget");
  solve->add_flag("--proof", config.proof, "On unsat, also print a set-of-support refutation");
  solve->add_option("--sos-max-clauses", config.sos.max_clauses, "Derived-clause limit for --proof");
  solve->add_option("--sos-max-levels", config.sos.max_levels, "Level limit for --proof");
  solve->add_flag("--sos-subsumption", config.sos.forward_subsumption,
                  "Drop resolvents subsumed by a supported clause during --proof");
  bind(solve, cmd_solve);

  auto* deepen = app.add_subcommand("deepen", "Try distance levels 1, 2, ... in interleaved slices until one is unsat");
  add_input(deepen, config);
  add_support(deepen, config);
  add_mode(deepen, config);
  add_solver(deepen, config);
  deepen->add_option("--slice", config.slice_calls, "Initial call budget per level and round (doubles per round)")
      ->default_val(1000);
  deepen->add_option("--max-level", config.max_level, "Stop after this level");
  deepen->add_option("--prover", config.prover,
                     "External prover command; {file} and {timeout} are substituted and SZS status lines read");
  deepen->add_option("--timeout", config.prover_timeout, "Seconds per level for --prover")->default_val(10.0);
  bind(deepen, cmd_deepen);

  auto* distance = app.add_subcommand("distance", "Print clause distances as clause_id,distance");
  add_input(distance, config);
  add_support(distance, config);
  add_mode(distance, config);
  add_output(distance, config);
  distance->add_option("-n,--bound", config.bound, "Build only the part of the graph within n");
  distance->add_option("--from", config.source_clause, "Distance from this clause (with --to)");
  distance->add_option("--to", config.target, "Distance to this clause (with --from)");
  distance->add_flag("--pairs", config.pairs, "All pairwise distances as from,to,distance");
  bind(distance, cmd_distance);

  auto* path = app.add_subcommand("path", "Print a shortest alternating path to a clause");
  add_input(path, config);
  add_support(path, config);
  add_mode(path, config);
  path->add_option("--to", config.target, "Target clause id")->required();
  path->add_option("--from", config.source_clause, "Start clause id instead of the support");
  bind(path, cmd_path);

  auto* split = app.add_subcommand("split", "Replace a clause by instances of one variable over the function symbols");
  add_input(split, config);
  add_output(split, config);
  split->add_option("-c,--clause", config.split_clause, "Clause id")->required();
  split->add_option("--var", config.split_variable, "Variable to split (default: the one breaking most unifications)");
  split->add_flag("--binary", config.binary_split, "Two balanced symbol groups instead of one per symbol");
  split->add_option("--constant", config.extra_constants, "Extra constant symbols");
  bind(split, cmd_split);

  auto* radius = app.add_subcommand("radius", "Smallest n whose relevant set is unsat, with its size");
  add_input(radius, config);
  add_support(radius, config);
  bind(radius, cmd_radius);

  auto* stats = app.add_subcommand("stats", "Clause set statistics: b, k and the relevant-set budget");
  add_input(stats, config);
  add_support(stats, config);
  add_mode(stats, config);
  stats->add_option("-n,--bound", config.bound, "Compare |R_n| with 2|U| b^(n-1) k (k-1)^(n-2)");
  bind(stats, cmd_stats);

  auto* gen = app.add_subcommand("gen", "Generate benchmark clause sets");
  gen->add_option("family", config.family, "ksat, bounded, core-tail, horn, hub or fo")->required();
  gen->add_option("--seed", config.seed, "Random seed")->default_val(1);
  gen->add_option("--vars", config.vars, "Atoms (core atoms for core-tail)")->default_val(30);
  gen->add_option("--clauses", config.clauses, "Clauses (tail clauses for core-tail)")->default_val(128);
  gen->add_option("-k,--width", config.width, "Literals per clause")->default_val(3);
  gen->add_option("-b", config.b, "Clauses per atom and sign (bounded)")->default_val(2);
  gen->add_option("--branching", config.branching, "Children per level (horn)")->delimiter(',');
  gen->add_option("--tail-atoms", config.tail_atoms, "Tail atoms (core-tail)")->default_val(40);
  gen->add_option("--hub-m", config.hub_m, "Clauses p | a_i (hub)")->default_val(50);
  gen->add_option("--hub-p", config.hub_p, "Clauses ~p | b_j (hub)")->default_val(50);
  gen->add_option("--to", config.output_format, "Output format")
      ->transform(choice(kFormats));
  gen->add_flag("--json", config.json, "Summary on stderr as JSON");
  add_output(gen, config);
  bind(gen, cmd_gen);

  CLI11_PARSE(app, argc, argv);
  try {
    return command(config, Streams{std::cout, std::cerr});
  } catch (const Error& e) {
    std::cerr << "aprel: " << e.what() << '\n';
    return kExitError;
  }
}
