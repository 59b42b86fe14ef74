#include "commands.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "aprel/alternating_path.hpp"
#include "aprel/dimacs.hpp"
#include "aprel/distance.hpp"
#include "aprel/dpll_rel.hpp"
#include "aprel/error.hpp"
#include "aprel/generators.hpp"
#include "aprel/purity.hpp"
#include "aprel/splitting.hpp"
#include "aprel/tptp.hpp"

namespace aprel::cli {

using nlohmann::json;

namespace {

bool is_tautology(const Clause& c) {
  auto lits = c.literals();
  return std::any_of(lits.begin(), lits.end(), [&](const Literal& l) { return c.contains(negate(l)); });
}

ClauseSet load(const RunConfig& config) {
  if (config.input.empty()) throw Error("no input file");
  auto set = load_input(config.input, config.format);
  if (config.drop_tautologies) set = set.filter([](const Clause& c) { return !is_tautology(c); });
  return set;
}

std::vector<std::vector<ClauseId>> supports(const RunConfig& config, const ClauseSet& set) {
  std::vector<std::string> specs = config.supports;
  if (specs.empty()) specs.push_back(default_support_spec(set));
  if (specs.size() > 1 && !config.intersect) {
    throw Error("several support specs given; pass --intersect to combine them");
  }
  std::vector<std::vector<ClauseId>> out;
  for (const auto& spec : specs) out.push_back(resolve_support(set, spec));
  return out;
}

GraphMode graph_mode(const RunConfig& config, const ClauseSet& set) {
  return config.mode.value_or(default_mode(set));
}

void write_set(std::ostream& out, const ClauseSet& set) {
  if (set.format() == SourceFormat::dimacs && set.is_ground()) {
    write_dimacs(out, set);
  } else {
    write_tptp(out, set);
  }
}

std::string set_text(const ClauseSet& set) {
  std::ostringstream out;
  write_set(out, set);
  return out.str();
}

/// Writes `text` to the configured output file, or to `fallback`.
void emit(const RunConfig& config, std::ostream& fallback, const std::string& text) {
  if (config.output.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw Error("cannot write " + config.output.string());
  file << text;
}

json distance_json(Distance d) {
  if (d.finite()) return d.value();
  return "inf";
}

json ids_json(std::span<const ClauseId> ids) { return json(std::vector<ClauseId>(ids.begin(), ids.end())); }

std::uint32_t require_bound(const RunConfig& config, const char* command) {
  if (!config.bound || *config.bound == 0) {
    throw Error(std::string(command) + " needs --bound n with n >= 1");
  }
  return *config.bound;
}

void require_ground(const ClauseSet& set, const char* command) {
  if (!set.is_ground()) {
    throw Error(std::string(command) + " needs a ground clause set; this input has variables");
  }
}

SolverConfig solver_config(const RunConfig& config) {
  SolverConfig sc;
  sc.units = config.units;
  sc.max_calls = config.max_calls;
  return sc;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::sat: return kExitSat;
    case Verdict::unsat: return kExitUnsat;
    case Verdict::unknown: break;
  }
  return kExitUnknown;
}

std::string status_line(Verdict v) {
  switch (v) {
    case Verdict::sat: return "s SATISFIABLE";
    case Verdict::unsat: return "s UNSATISFIABLE";
    case Verdict::unknown: break;
  }
  return "s UNKNOWN";
}

std::vector<std::string> model_literals(const Assignment& model, const AtomTable& atoms) {
  std::vector<std::string> out;
  for (int a = 1; a <= atoms.size(); ++a) {
    auto value = static_cast<std::size_t>(a) < model.size() ? model[static_cast<std::size_t>(a)] : 0;
    if (value == 0) continue;
    if (auto n = atoms.dimacs_number(a)) {
      out.push_back(std::to_string(value > 0 ? *n : -*n));
    } else {
      out.push_back((value > 0 ? "" : "~") + atoms.name(a));
    }
  }
  return out;
}

bool all_numbered(const AtomTable& atoms) {
  for (int a = 1; a <= atoms.size(); ++a) {
    if (!atoms.dimacs_number(a)) return false;
  }
  return true;
}

void write_model(std::ostream& out, const Assignment& model, const AtomTable& atoms) {
  auto lits = model_literals(model, atoms);
  bool numbered = all_numbered(atoms);
  if (numbered) lits.push_back("0");
  constexpr std::size_t kPerLine = 10;
  for (std::size_t i = 0; i < lits.size(); i += kPerLine) {
    out << 'v';
    for (std::size_t j = i; j < std::min(lits.size(), i + kPerLine); ++j) out << ' ' << lits[j];
    out << '\n';
  }
  if (lits.empty()) out << "v\n";
}

std::string power_of_two(std::size_t k) {
  if (k < 64) return std::to_string(std::uint64_t{1} << k);
  return "2^" + std::to_string(k);
}

const char* kCountingNote =
    "levels count clauses on an alternating path, so the support itself is level 1; "
    "counting resolution steps from the support instead gives one less";

// ---------------------------------------------------------------------------
// External prover

struct ProverRun {
  Verdict verdict = Verdict::unknown;
  int exit_status = 0;
  bool failed = false;
  std::string detail;
};

ProverRun run_prover(const std::string& command) {
  ProverRun run;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen((command + " 2>&1").c_str(), "r"), pclose);
  if (!pipe) {
    run.failed = true;
    run.detail = "cannot start prover";
    return run;
  }
  std::string output;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe.get())) output.append(buffer, n);
  int status = pclose(pipe.release());
  run.exit_status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  run.verdict = parse_szs_status(output);
  if (run.exit_status != 0 && run.verdict == Verdict::unknown) {
    run.failed = true;
    run.detail = "prover exited with status " + std::to_string(run.exit_status);
  }
  return run;
}

int deepen_external(const RunConfig& config, Streams io, const ClauseSet& set,
                    std::span<const ClauseId> support, GraphMode mode) {
  auto map = bfs_from_support(build_graph(set, mode), support);
  std::uint32_t deepest = std::max<std::uint32_t>(1, map.max_finite());
  std::uint32_t last = config.max_level ? std::min(*config.max_level, deepest) : deepest;
  json levels = json::array();
  std::optional<std::uint32_t> proved;
  bool saturated = false;

  for (std::uint32_t n = 1; n <= last && !proved; ++n) {
    auto subset = relevant_set(set, support, n, mode);
    auto file = std::filesystem::temp_directory_path() /
                ("aprel-" + std::to_string(::getpid()) + "-level-" + std::to_string(n) + ".p");
    {
      std::ofstream out(file);
      write_tptp(out, subset);
    }
    auto run = run_prover(expand_prover_command(config.prover, file.string(), config.prover_timeout));
    std::filesystem::remove(file);
    std::string outcome = run.failed ? "error" : std::string(verdict_name(run.verdict));
    if (!config.json) {
      io.out << "c level " << n << " clauses=" << subset.size() << ' ' << outcome;
      if (run.failed) io.out << " (" << run.detail << ')';
      io.out << '\n';
    }
    levels.push_back({{"level", n}, {"clauses", subset.size()}, {"outcome", outcome}});
    if (run.verdict == Verdict::unsat) proved = n;
    if (run.verdict == Verdict::sat && n == deepest) saturated = true;
  }

  Verdict verdict = proved ? Verdict::unsat : saturated ? Verdict::sat : Verdict::unknown;
  if (config.json) {
    json j{{"status", verdict_name(verdict)}, {"levels", levels}, {"note", kCountingNote}};
    if (proved) j["level"] = *proved;
    io.out << j.dump(2) << '\n';
  } else {
    io.out << status_line(verdict) << '\n';
    if (proved) io.out << "c level=" << *proved << '\n';
    io.out << "c note: " << kCountingNote << '\n';
  }
  return exit_code(verdict);
}

}  // namespace

Verdict parse_szs_status(const std::string& output) {
  static const std::regex status(R"(SZS\s+status\s+([A-Za-z]+))");
  Verdict verdict = Verdict::unknown;
  for (auto it = std::sregex_iterator(output.begin(), output.end(), status); it != std::sregex_iterator(); ++it) {
    std::string word = (*it)[1];
    if (word == "Theorem" || word == "Unsatisfiable") verdict = Verdict::unsat;
    else if (word == "Satisfiable") verdict = Verdict::sat;
    else verdict = Verdict::unknown;
  }
  return verdict;
}

std::string expand_prover_command(const std::string& pattern, const std::string& file, double timeout) {
  std::ostringstream seconds;
  seconds << timeout;
  std::string out;
  for (std::size_t i = 0; i < pattern.size();) {
    if (pattern.compare(i, 6, "{file}") == 0) {
      out += "'" + file + "'";
      i += 6;
    } else if (pattern.compare(i, 9, "{timeout}") == 0) {
      out += seconds.str();
      i += 9;
    } else {
      out += pattern[i++];
    }
  }
  return out;
}

int cmd_filter(const RunConfig& config, Streams io) {
  auto set = load(config);
  auto all = supports(config, set);
  std::uint32_t n = require_bound(config, "filter");
  auto mode = graph_mode(config, set);

  ClauseSet filtered = config.intersect ? multi_support_intersection(set, all, n)
                                        : relevant_set(set, all.front(), n, mode);
  if (config.purity) filtered = purity_filter(filtered);

  // Histogram over the input: the largest distance from any of the supports.
  auto graph = build_graph(set, mode);
  std::vector<DistanceMap> maps;
  for (const auto& u : all) maps.push_back(bfs_from_support(graph, u));
  std::map<std::string, std::size_t> histogram;
  std::map<std::uint32_t, std::size_t> finite;
  std::size_t unreachable = 0;
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    Distance worst(1);
    for (const auto& m : maps) worst = std::max(worst, m.distance_at(pos));
    if (worst.finite()) {
      ++finite[worst.value()];
    } else {
      ++unreachable;
    }
  }

  std::string text = set_text(filtered);
  if (config.json) {
    json hist = json::object();
    for (auto [d, count] : finite) hist[std::to_string(d)] = count;
    if (unreachable > 0) hist["inf"] = unreachable;
    json j{{"input_clauses", set.size()},
           {"kept_clauses", filtered.size()},
           {"bound", n},
           {"mode", mode_name(mode)},
           {"histogram", hist},
           {"kept_ids", filtered.ids()}};
    if (config.output.empty()) {
      j["set"] = text;
    } else {
      emit(config, io.out, text);
    }
    io.out << j.dump(2) << '\n';
    return 0;
  }

  emit(config, io.out, text);
  std::ostream& summary = config.output.empty() ? io.err : io.out;
  summary << "c input=" << set.size() << " kept=" << filtered.size() << " bound=" << n
          << " mode=" << mode_name(mode) << '\n';
  summary << "c histogram";
  for (auto [d, count] : finite) summary << ' ' << d << ':' << count;
  if (unreachable > 0) summary << " inf:" << unreachable;
  summary << '\n';
  return 0;
}

int cmd_solve(const RunConfig& config, Streams io) {
  auto set = load(config);
  require_ground(set, "solve");
  auto sc = solver_config(config);

  AtomTable atoms;
  SolveResult result;
  std::vector<ClauseId> support;
  if (config.no_relevance) {
    atoms = AtomTable::build(set);
    result = dpll(to_prop(set, atoms), sc);
  } else {
    support = supports(config, set).front();
    auto problem = prepare_relevance(set, support);
    atoms = problem.atoms;
    result = dpll_rel(problem.cnf, problem.steps, config.trusted ? RelMode::trusted : RelMode::fallback, sc);
  }

  std::optional<SupportNeighborhood> neighborhood;
  if (config.count_calls) {
    if (support.empty()) support = supports(config, set).front();
    neighborhood = support_neighborhood(set, support);
  }

  std::optional<SosOutcome> refutation;
  if (config.proof && result.verdict == Verdict::unsat) {
    if (support.empty()) support = supports(config, set).front();
    refutation = sos_refute(to_prop(set, atoms), support, config.sos);
  }
  std::string proof_text;
  if (refutation && refutation->status == SosStatus::refuted) {
    std::ostringstream out;
    write_refutation(out, refutation->proof, set, atoms);
    proof_text = out.str();
  }

  if (config.json) {
    json j{{"status", verdict_name(result.verdict)},
           {"calls", result.stats.calls},
           {"splits", result.stats.splits},
           {"units", result.stats.units},
           {"fallback_calls", result.stats.fallback_calls},
           {"relevance", !config.no_relevance},
           {"trusted", config.trusted}};
    if (result.verdict == Verdict::sat) j["model"] = model_literals(result.model, atoms);
    if (neighborhood) {
      j["neighborhood_atoms"] = neighborhood->size.atoms;
      j["radius"] = distance_json(neighborhood->radius);
      j["call_budget"] = power_of_two(neighborhood->size.atoms);
      j["plain_budget"] = power_of_two(static_cast<std::size_t>(atoms.size()));
    }
    if (refutation) {
      j["sos_status"] = sos_status_name(refutation->status);
      if (config.output.empty()) {
        j["refutation"] = proof_text;
      } else {
        emit(config, io.out, proof_text);
      }
    }
    io.out << j.dump(2) << '\n';
    return exit_code(result.verdict);
  }

  io.out << status_line(result.verdict) << '\n';
  if (result.verdict == Verdict::sat) write_model(io.out, result.model, atoms);
  io.out << "c calls=" << result.stats.calls << " splits=" << result.stats.splits
         << " units=" << result.stats.units << '\n';
  if (result.stats.fallback_calls > 0) io.out << "c fallback_calls=" << result.stats.fallback_calls << '\n';
  if (neighborhood) {
    io.out << "c neighborhood_atoms=" << neighborhood->size.atoms
           << " radius=" << neighborhood->radius.to_string()
           << " budget=" << power_of_two(neighborhood->size.atoms)
           << " plain_budget=" << power_of_two(static_cast<std::size_t>(atoms.size())) << '\n';
  }
  if (refutation) {
    if (refutation->status != SosStatus::refuted) {
      io.out << "c set-of-support search: " << sos_status_name(refutation->status) << '\n';
    } else if (config.output.empty()) {
      io.out << proof_text;
    } else {
      emit(config, io.out, proof_text);
    }
  }
  return exit_code(result.verdict);
}

int cmd_deepen(const RunConfig& config, Streams io) {
  auto set = load(config);
  auto support = supports(config, set).front();
  auto mode = graph_mode(config, set);
  if (!config.prover.empty()) return deepen_external(config, io, set, support, mode);
  if (!set.is_ground()) {
    throw Error("deepen on a first-order set needs --prover with an external prover command");
  }
  if (config.slice_calls == 0) throw Error("--slice must be positive");

  auto map = bfs_from_support(build_graph(set, mode), support);
  std::uint32_t deepest = std::max<std::uint32_t>(1, map.max_finite());
  std::uint32_t last = config.max_level ? std::min(*config.max_level, deepest) : deepest;
  auto atoms = AtomTable::build(set);

  struct Level {
    std::uint32_t n;
    PropCnf cnf;
    std::size_t clauses;
    std::uint64_t budget;
    std::uint64_t calls = 0;
    bool done = false;
  };
  std::vector<Level> levels;
  json report = json::array();
  std::optional<std::uint32_t> proved;
  bool saturated = false;
  auto sc = solver_config(config);

  // Round r starts level r + 1 and gives every open level a slice; a level
  // left undecided gets a doubled slice in the next round.
  for (std::uint32_t round = 0; !proved; ++round) {
    if (round < last) {
      auto subset = map.within(round + 1);
      auto level_set = set.subset(subset);
      levels.push_back({round + 1, to_prop(level_set, atoms), level_set.size(), config.slice_calls});
    }
    bool open = false;
    for (auto& level : levels) {
      if (level.done) continue;
      sc.max_calls = level.budget;
      auto result = dpll(level.cnf, sc);
      level.calls += result.stats.calls;
      if (result.verdict == Verdict::unknown) {
        level.budget *= 2;
        open = true;
        continue;
      }
      level.done = true;
      if (!config.json) {
        io.out << "c level " << level.n << " clauses=" << level.clauses << ' '
               << verdict_name(result.verdict) << " calls=" << level.calls << '\n';
      }
      report.push_back({{"level", level.n},
                        {"clauses", level.clauses},
                        {"outcome", verdict_name(result.verdict)},
                        {"calls", level.calls}});
      if (result.verdict == Verdict::unsat) {
        proved = level.n;
        break;
      }
      if (level.n == deepest) saturated = true;
    }
    if (proved || (!open && round + 1 >= last)) break;
  }

  Verdict verdict = proved ? Verdict::unsat : saturated ? Verdict::sat : Verdict::unknown;
  if (config.json) {
    json j{{"status", verdict_name(verdict)}, {"levels", report}, {"note", kCountingNote}};
    if (proved) j["level"] = *proved;
    io.out << j.dump(2) << '\n';
  } else {
    io.out << status_line(verdict) << '\n';
    if (proved) io.out << "c level=" << *proved << '\n';
    io.out << "c note: " << kCountingNote << '\n';
  }
  return exit_code(verdict);
}

int cmd_distance(const RunConfig& config, Streams io) {
  auto set = load(config);

  if (config.source_clause && config.target) {
    auto d = relevance_distance(set, *config.source_clause, *config.target);
    if (config.json) {
      io.out << json{{"from", *config.source_clause}, {"to", *config.target}, {"distance", distance_json(d)}}.dump(2)
             << '\n';
    } else {
      io.out << d.to_string() << '\n';
    }
    return 0;
  }

  if (config.pairs) {
    std::ostringstream csv;
    json rows = json::array();
    csv << "from,to,distance\n";
    auto ids = set.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        auto d = relevance_distance(set, ids[i], ids[j]);
        csv << ids[i] << ',' << ids[j] << ',' << d.to_string() << '\n';
        rows.push_back({{"from", ids[i]}, {"to", ids[j]}, {"distance", distance_json(d)}});
      }
    }
    if (config.json) {
      io.out << json{{"pairs", rows}}.dump(2) << '\n';
    } else {
      emit(config, io.out, csv.str());
    }
    return 0;
  }

  auto support = supports(config, set).front();
  auto mode = graph_mode(config, set);
  auto map = config.bound ? bounded_build_and_search(set, support, *config.bound, mode)
                          : bfs_from_support(build_graph(set, mode), support);
  if (config.json) {
    json rows = json::array();
    for (std::size_t pos = 0; pos < set.size(); ++pos) {
      rows.push_back({{"clause", set[pos].id()}, {"distance", distance_json(map.distance_at(pos))}});
    }
    json j{{"support", ids_json(support)}, {"mode", mode_name(mode)}, {"distances", rows}};
    if (config.bound) j["bound"] = *config.bound;
    io.out << j.dump(2) << '\n';
    return 0;
  }
  std::ostringstream csv;
  map.write_csv(csv);
  emit(config, io.out, csv.str());
  return 0;
}

int cmd_path(const RunConfig& config, Streams io) {
  auto set = load(config);
  if (!config.target) throw Error("path needs --to <clause id>");
  std::vector<ClauseId> support;
  if (config.source_clause) {
    support = {*config.source_clause};
  } else {
    support = supports(config, set).front();
  }
  auto map = bfs_from_support(build_graph(set, graph_mode(config, set)), support);
  auto d = map.distance(*config.target);
  if (!d.finite()) {
    if (config.json) {
      io.out << json{{"to", *config.target}, {"distance", "inf"}}.dump(2) << '\n';
    } else {
      io.err << "clause " << *config.target << " is unreachable from the support\n";
    }
    return kExitError;
  }
  auto path = witness_path(map, *config.target);
  auto check = validate_path(set, path);
  auto text = format_path(set, path);
  if (config.json) {
    json j{{"to", *config.target}, {"distance", d.value()}, {"path", text},
           {"clauses", path.clauses}, {"valid", check.valid}};
    if (!check.valid) j["reason"] = check.reason;
    io.out << j.dump(2) << '\n';
  } else {
    io.out << text << '\n';
    if (!check.valid) io.err << "witness failed validation: " << check.reason << '\n';
  }
  return check.valid ? 0 : kExitError;
}

int cmd_split(const RunConfig& config, Streams io) {
  auto set = load(config);
  if (!config.split_clause) throw Error("split needs --clause <id>");
  ClauseId id = *config.split_clause;
  std::string variable = config.split_variable;
  if (variable.empty()) {
    auto chosen = choose_split_variable(set, id);
    if (!chosen) throw Error("no variable of clause " + std::to_string(id) + " breaks a unification; pass --var");
    variable = *chosen;
  }
  auto plan = config.binary_split ? binary_split_plan(set, id, variable, config.extra_constants)
                                  : full_split_plan(set, id, variable, config.extra_constants);
  auto result = split_clause(set, plan);
  std::ostringstream text;
  write_tptp(text, result.set);

  if (config.json) {
    json groups = json::array();
    for (const auto& g : plan.groups) {
      json members = json::array();
      for (const auto& f : g) members.push_back(f.name + "/" + std::to_string(f.arity));
      groups.push_back(members);
    }
    json j{{"clause", id}, {"variable", variable}, {"descendants", result.descendants},
           {"groups", groups}, {"group_of", result.group_of}};
    if (config.output.empty()) {
      j["set"] = text.str();
    } else {
      emit(config, io.out, text.str());
    }
    io.out << j.dump(2) << '\n';
    return 0;
  }
  emit(config, io.out, text.str());
  std::ostream& summary = config.output.empty() ? io.err : io.out;
  summary << "c split clause " << id << " on " << variable << " into " << result.descendants.size()
          << " clauses:";
  for (ClauseId d : result.descendants) summary << ' ' << d;
  summary << '\n';
  return 0;
}

int cmd_radius(const RunConfig& config, Streams io) {
  auto set = load(config);
  require_ground(set, "radius");
  auto support = supports(config, set).front();
  auto hood = support_neighborhood(set, support);
  if (config.json) {
    io.out << json{{"radius", distance_json(hood.radius)},
                   {"clauses", hood.clauses},
                   {"atoms", hood.size.atoms},
                   {"signed_literals", hood.size.signed_literals},
                   {"occurrences", hood.size.occurrences}}
                  .dump(2)
           << '\n';
    return 0;
  }
  io.out << "radius=" << hood.radius.to_string() << '\n';
  io.out << "clauses=" << hood.clauses.size() << '\n';
  io.out << "atoms=" << hood.size.atoms << " signed_literals=" << hood.size.signed_literals
         << " occurrences=" << hood.size.occurrences << '\n';
  return 0;
}

int cmd_stats(const RunConfig& config, Streams io) {
  auto set = load(config);
  // b: clauses containing a predicate with a given sign; k: clause width.
  std::map<std::pair<SymbolId, bool>, std::size_t> per_sign;
  std::size_t k = 0;
  std::size_t literals = 0;
  for (const auto& c : set) {
    k = std::max(k, c.size());
    literals += c.size();
    std::set<std::pair<SymbolId, bool>> seen;
    for (const auto& l : c.literals()) seen.insert({l.predicate(), l.positive});
    for (const auto& key : seen) ++per_sign[key];
  }
  std::size_t b = 0;
  std::set<SymbolId> predicates;
  for (const auto& [key, count] : per_sign) {
    b = std::max(b, count);
    predicates.insert(key.first);
  }

  json j{{"clauses", set.size()},
         {"literals", literals},
         {"predicates", predicates.size()},
         {"ground", set.is_ground()},
         {"b", b},
         {"k", k}};
  if (set.is_ground()) j["atoms"] = AtomTable::build(set).size();

  std::vector<ClauseId> support;
  if (!config.supports.empty() || config.bound) {
    try {
      support = supports(config, set).front();
    } catch (const Error&) {
      if (!config.supports.empty()) throw;
    }
  }
  if (!support.empty()) j["support"] = support.size();
  if (config.bound && !support.empty()) {
    std::uint32_t n = require_bound(config, "stats");
    double budget = n == 1 ? static_cast<double>(support.size())
                           : 2.0 * static_cast<double>(support.size()) * std::pow(b, n - 1) *
                                 static_cast<double>(k) * std::pow(static_cast<double>(k) - 1, n - 2);
    j["bound"] = n;
    j["relevant_clauses"] = relevant_set(set, support, n, graph_mode(config, set)).size();
    j["relevant_budget"] = budget;
  }

  if (config.json) {
    io.out << j.dump(2) << '\n';
    return 0;
  }
  io.out << "clauses=" << set.size() << " literals=" << literals << " predicates=" << predicates.size();
  if (j.contains("atoms")) io.out << " atoms=" << j["atoms"].get<int>();
  io.out << " ground=" << (set.is_ground() ? "yes" : "no") << '\n';
  io.out << "b=" << b << " k=" << k << '\n';
  if (j.contains("relevant_budget")) {
    io.out << "n=" << j["bound"].get<std::uint32_t>() << " support=" << support.size()
           << " relevant=" << j["relevant_clauses"].get<std::size_t>()
           << " budget=" << j["relevant_budget"].get<double>() << '\n';
  }
  return 0;
}

int cmd_gen(const RunConfig& config, Streams io) {
  Rng rng(config.seed);
  ClauseSet set;
  InputFormat format = InputFormat::dimacs;
  if (config.family == "ksat") {
    set = random_ksat(rng, config.vars, config.clauses, config.width);
  } else if (config.family == "bounded") {
    set = random_bounded_set(rng, config.b, config.width, config.clauses, config.vars);
  } else if (config.family == "core-tail") {
    set = core_and_tail(rng, config.vars, config.tail_atoms, config.clauses);
  } else if (config.family == "horn") {
    if (config.branching.empty()) throw Error("horn needs --branching, e.g. 3,2");
    set = horn_tree(config.branching);
    format = InputFormat::tptp;
  } else if (config.family == "hub") {
    set = hub_fixture(config.hub_m, config.hub_p);
    format = InputFormat::tptp;
  } else if (config.family == "fo") {
    FirstOrderParams params;
    params.min_clauses = params.max_clauses = config.clauses;
    params.max_width = config.width;
    set = random_first_order_set(rng, params);
    format = InputFormat::tptp;
  } else {
    throw Error("unknown family '" + config.family + "' (ksat, bounded, core-tail, horn, hub, fo)");
  }
  if (config.output_format != InputFormat::automatic) format = config.output_format;
  std::ostringstream text;
  if (format == InputFormat::dimacs) {
    write_dimacs(text, set);
  } else {
    write_tptp(text, set);
  }
  emit(config, io.out, text.str());
  if (config.json) {
    io.err << json{{"family", config.family}, {"seed", config.seed}, {"clauses", set.size()}}.dump() << '\n';
  }
  return 0;
}

}  // namespace aprel::cli
