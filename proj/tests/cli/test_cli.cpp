#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "aprel/dimacs.hpp"
#include "aprel/distance.hpp"
#include "aprel/dpll_rel.hpp"
#include "aprel/generators.hpp"
#include "aprel/tptp.hpp"
#include "commands.hpp"
#include "fixtures.hpp"

using namespace aprel;
using namespace aprel::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run run(int (*command)(const RunConfig&, Streams), const RunConfig& config) {
  std::ostringstream out, err;
  Run r;
  r.status = command(config, Streams{out, err});
  r.out = out.str();
  r.err = err.str();
  return r;
}

RunConfig on(const std::string& data_file) {
  RunConfig config;
  config.input = fixture::data_path(data_file);
  return config;
}

/// A scratch directory removed with the test.
class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("aprel-cli-" + std::to_string(counter_++) + "-" +
                                               std::to_string(::testing::UnitTest::GetInstance()->random_seed()))) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) const {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path;
  }
  fs::path path(const std::string& name) const { return dir_ / name; }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST(Input, FormatDetection) {
  Scratch scratch;
  auto dimacs = scratch.write("plain", "c comment\np cnf 2 1\n1 -2 0\n");
  auto tptp = scratch.write("other", "% comment\ncnf(a, axiom, p | ~q).\n");
  EXPECT_EQ(load_input(dimacs, InputFormat::automatic).format(), SourceFormat::dimacs);
  EXPECT_EQ(load_input(tptp, InputFormat::automatic).format(), SourceFormat::tptp);
  EXPECT_THROW(load_input(dimacs, InputFormat::tptp), ParseError);
  EXPECT_THROW(load_input(scratch.path("missing.cnf"), InputFormat::automatic), Error);
}

TEST(Input, ParseErrorsCarryFileAndLine) {
  Scratch scratch;
  auto bad = scratch.write("bad.p", "cnf(a, axiom, p).\ncnf(b, axiom, q\n");
  try {
    load_input(bad, InputFormat::automatic);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.source(), bad.string());
    EXPECT_GE(e.line(), 2u);
  }
}

TEST(Input, IncludeDirectoryFromEnvironment) {
  Scratch scratch;
  scratch.write("axioms.p", "cnf(ax, axiom, p(a)).\n");
  auto main_file = scratch.write("main.p", "include('axioms.p').\ncnf(goal, negated_conjecture, ~p(a)).\n");
  EXPECT_EQ(load_input(main_file, InputFormat::automatic).size(), 2u);

  // Relative to the including file unless the variable says otherwise.
  auto elsewhere = fs::path(fixture::data_path("main_with_include.p"));
  auto copy = scratch.write("copy.p", slurp(elsewhere));
  EXPECT_THROW(load_input(copy, InputFormat::automatic), ParseError);
  ::setenv("APREL_TPTP_DIR", APREL_TEST_DATA, 1);
  EXPECT_EQ(load_input(copy, InputFormat::automatic).size(), 3u);
  ::unsetenv("APREL_TPTP_DIR");
}

TEST(Input, SupportSpecs) {
  auto set = fixture::load("horn_goal.p");
  EXPECT_EQ(default_support_spec(set), "roles:negated_conjecture");
  EXPECT_EQ(resolve_support(set, "roles:negated_conjecture"), (std::vector<ClauseId>{1}));
  EXPECT_EQ(resolve_support(set, "polarity:all_negative"), (std::vector<ClauseId>{1}));
  EXPECT_EQ(resolve_support(set, "polarity:all_positive").size(), 6u);
  EXPECT_EQ(resolve_support(set, "ids:3, 2,3"), (std::vector<ClauseId>{2, 3}));

  Scratch scratch;
  auto ids = scratch.write("ids.txt", "4\n5 6\n");
  EXPECT_EQ(resolve_support(set, "file:" + ids.string()), (std::vector<ClauseId>{4, 5, 6}));

  EXPECT_THROW(resolve_support(set, "roles:hypothesis"), Error);  // selects nothing
  EXPECT_THROW(resolve_support(set, "ids:99"), Error);
  EXPECT_THROW(resolve_support(set, "ids:x"), Error);
  EXPECT_THROW(resolve_support(set, "colour:red"), Error);
  EXPECT_THROW(resolve_support(set, "negated_conjecture"), Error);
  EXPECT_THROW(resolve_support(set, "file:" + scratch.path("none").string()), Error);

  auto dimacs = fixture::load("horn_goal.cnf");
  EXPECT_EQ(default_support_spec(dimacs), "polarity:all_negative");
  auto no_conjecture = fixture::tptp("cnf(a, axiom, ~p). cnf(b, axiom, p).");
  EXPECT_EQ(default_support_spec(no_conjecture), "polarity:all_negative");
}

TEST(Filter, HornGoalLevels) {
  auto config = on("horn_goal.p");
  config.bound = 4;
  auto all = run(cmd_filter, config);
  EXPECT_EQ(all.status, 0);
  EXPECT_EQ(parse_tptp_cnf(all.out).size(), 11u);
  EXPECT_NE(all.err.find("histogram 1:1 2:1 3:3 4:6"), std::string::npos) << all.err;

  config.bound = 1;
  auto only_support = run(cmd_filter, config);
  auto kept = parse_tptp_cnf(only_support.out);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept.origin(0).name, "goal");

  config.bound = 0;
  EXPECT_THROW(run(cmd_filter, config), Error);
}

TEST(Filter, KeepsInputFormatAndWritesFiles) {
  Scratch scratch;
  auto config = on("horn_goal.cnf");
  config.bound = 3;
  config.output = scratch.path("out.cnf");
  auto r = run(cmd_filter, config);
  EXPECT_NE(r.out.find("kept=5"), std::string::npos) << r.out;
  auto written = read_dimacs_file(config.output);
  EXPECT_EQ(written.size(), 5u);
}

TEST(Filter, IntersectionOfTwoSupports) {
  auto config = on("horn_goal.p");
  config.bound = 3;
  config.supports = {"polarity:all_negative", "polarity:all_positive"};
  EXPECT_THROW(run(cmd_filter, config), Error);
  config.intersect = true;
  auto r = run(cmd_filter, config);
  auto set = fixture::horn_goal();
  std::vector<std::vector<ClauseId>> supports{fixture::all_negative(set), fixture::all_positive(set)};
  auto expected = multi_support_intersection(set, supports, 3);
  EXPECT_EQ(parse_tptp_cnf(r.out).size(), expected.size());
}

TEST(Filter, JsonSummary) {
  auto config = on("horn_goal.p");
  config.bound = 2;
  config.json = true;
  auto j = nlohmann::json::parse(run(cmd_filter, config).out);
  EXPECT_EQ(j["input_clauses"], 11);
  EXPECT_EQ(j["kept_clauses"], 2);
  EXPECT_EQ(j["histogram"]["4"], 6);
  EXPECT_EQ(j["kept_ids"], nlohmann::json::array({1, 2}));
  EXPECT_TRUE(j["set"].is_string());
}

TEST(Filter, PurityDropsDeadEnds) {
  Scratch scratch;
  auto file = scratch.write("pure.cnf", "p cnf 3 3\n-1 0\n1 2 0\n3 0\n");
  RunConfig config;
  config.input = file;
  config.bound = 3;
  config.purity = true;
  auto r = run(cmd_filter, config);
  // 2 has no complement, so {1,2} is pure and then so is {-1}.
  EXPECT_EQ(parse_dimacs(r.out).size(), 0u) << r.out;
}

TEST(Solve, UnsatFixture) {
  auto r = run(cmd_solve, on("horn_goal.cnf"));
  EXPECT_EQ(r.status, kExitUnsat);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "s UNSATISFIABLE");
  EXPECT_EQ(count_lines(r.out, "c calls="), 1u);
  EXPECT_EQ(count_lines(r.out, "v "), 0u);
}

TEST(Solve, SatFixtureTrustedGivesPartialModel) {
  auto config = on("sat_small.cnf");
  config.trusted = true;
  auto r = run(cmd_solve, config);
  EXPECT_EQ(r.status, kExitSat);
  EXPECT_NE(r.out.find("s SATISFIABLE\nv "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(" 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("c calls="), std::string::npos);

  config.trusted = false;
  config.no_relevance = true;
  EXPECT_EQ(run(cmd_solve, config).status, kExitSat);
}

TEST(Solve, ModelSatisfiesEveryClause) {
  Rng rng(71);
  Scratch scratch;
  for (int t = 0; t < 20; ++t) {
    auto set = random_ksat(rng, 12, 40);
    auto file = scratch.write("k.cnf", print_dimacs(set));
    RunConfig config;
    config.input = file;
    config.json = true;
    auto j = nlohmann::json::parse(run(cmd_solve, config).out);
    if (j["status"] != "sat") continue;
    std::set<long> truth;
    for (const auto& lit : j["model"]) truth.insert(std::stol(lit.get<std::string>()));
    for (const auto& c : set) {
      bool satisfied = false;
      for (const auto& l : c.literals()) {
        long v = std::stol(set.symbols().name(l.predicate()));
        satisfied = satisfied || truth.count(l.positive ? v : -v) > 0;
      }
      EXPECT_TRUE(satisfied);
    }
  }
}

TEST(Solve, CountCallsReportsTheBudget) {
  auto config = on("horn_goal.p");
  config.count_calls = true;
  config.units = UnitPolicy::off;
  auto r = run(cmd_solve, config);
  EXPECT_EQ(r.status, kExitUnsat);
  EXPECT_NE(r.out.find("neighborhood_atoms=10 radius=4 budget=1024"), std::string::npos) << r.out;
}

TEST(Solve, UnknownOnCallLimit) {
  Rng rng(72);
  Scratch scratch;
  auto file = scratch.write("hard.cnf", print_dimacs(random_ksat(rng, 40, 170)));
  RunConfig config;
  config.input = file;
  config.max_calls = 2;
  config.units = UnitPolicy::off;
  config.no_relevance = true;
  auto r = run(cmd_solve, config);
  EXPECT_EQ(r.status, kExitUnknown);
  EXPECT_NE(r.out.find("s UNKNOWN"), std::string::npos);
}

TEST(Solve, RefutationExport) {
  auto config = on("horn_goal.p");
  config.proof = true;
  auto r = run(cmd_solve, config);
  EXPECT_NE(r.out.find("1. ~p  [input]  supported=true\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("21. $false  [resolve("), std::string::npos) << r.out;
}

TEST(Solve, RejectsFirstOrderInput) {
  EXPECT_THROW(run(cmd_solve, on("chain.p")), Error);
}

TEST(Solve, Deterministic) {
  Rng rng(73);
  Scratch scratch;
  auto file = scratch.write("k.cnf", print_dimacs(random_ksat(rng, 25, 105)));
  RunConfig config;
  config.input = file;
  EXPECT_EQ(run(cmd_solve, config).out, run(cmd_solve, config).out);
}

TEST(Solve, FilteredNeighborhoodKeepsUnsat) {
  Rng rng(74);
  Scratch scratch;
  int checked = 0;
  for (int t = 0; t < 60 && checked < 20; ++t) {
    auto set = random_ksat(rng, 10, 55);
    if (fixture::all_negative(set).empty()) continue;
    auto file = scratch.write("in.cnf", print_dimacs(set));
    RunConfig plain;
    plain.input = file;
    plain.no_relevance = true;
    if (run(cmd_solve, plain).status != kExitUnsat) continue;

    RunConfig radius;
    radius.input = file;
    radius.json = true;
    auto rad = nlohmann::json::parse(run(cmd_radius, radius).out);
    ASSERT_TRUE(rad["radius"].is_number()) << print_dimacs(set);

    RunConfig filter;
    filter.input = file;
    filter.bound = rad["radius"].get<std::uint32_t>();
    filter.output = scratch.path("core.cnf");
    run(cmd_filter, filter);
    RunConfig again;
    again.input = filter.output;
    again.no_relevance = true;
    EXPECT_EQ(run(cmd_solve, again).status, kExitUnsat);
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(Deepen, HornGoalSucceedsAtLevelFour) {
  auto r = run(cmd_deepen, on("horn_goal.p"));
  EXPECT_EQ(r.status, kExitUnsat);
  EXPECT_NE(r.out.find("c level=4\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("c note: levels count clauses"), std::string::npos);
  EXPECT_EQ(count_lines(r.out, "c level "), 4u);

  auto config = on("horn_goal.p");
  config.json = true;
  auto j = nlohmann::json::parse(run(cmd_deepen, config).out);
  EXPECT_EQ(j["level"], 4);
  EXPECT_EQ(j["status"], "unsat");
}

TEST(Deepen, SatisfiableInputExhaustsLevels) {
  auto r = run(cmd_deepen, on("sat_small.cnf"));
  EXPECT_EQ(r.status, kExitSat);
  EXPECT_NE(r.out.find("s SATISFIABLE"), std::string::npos);
}

TEST(Deepen, SlicesInterleaveLevels) {
  Rng rng(75);
  Scratch scratch;
  auto set = random_ksat(rng, 30, 150);
  auto file = scratch.write("k.cnf", print_dimacs(set));
  RunConfig config;
  config.input = file;
  config.slice_calls = 1;
  auto small = run(cmd_deepen, config);
  config.slice_calls = 100000;
  auto large = run(cmd_deepen, config);
  EXPECT_EQ(small.status, large.status);
  EXPECT_NE(small.status, kExitUnknown);
}

TEST(Deepen, ExternalProverOutcomes) {
  RunConfig config = on("chain.p");
  EXPECT_THROW(run(cmd_deepen, config), Error);

  config.prover = "echo '% SZS status Timeout for {file}'";
  auto timeout = run(cmd_deepen, config);
  EXPECT_EQ(timeout.status, kExitUnknown);
  EXPECT_NE(timeout.out.find("s UNKNOWN"), std::string::npos);
  EXPECT_EQ(count_lines(timeout.out, "c level "), 3u) << timeout.out;

  // Unsatisfiable once all three clauses are present.
  config.prover = "test $(grep -c cnf {file}) -ge 3 && echo '% SZS status Unsatisfiable' || echo '% SZS status GaveUp'";
  auto proved = run(cmd_deepen, config);
  EXPECT_EQ(proved.status, kExitUnsat);
  EXPECT_NE(proved.out.find("c level=3"), std::string::npos) << proved.out;

  config.prover = "exit 3";
  auto failing = run(cmd_deepen, config);
  EXPECT_EQ(failing.status, kExitUnknown);
  EXPECT_EQ(count_lines(failing.out, "c level "), 3u);
  EXPECT_NE(failing.out.find("prover exited with status 3"), std::string::npos);
}

TEST(Deepen, SzsParsing) {
  EXPECT_EQ(parse_szs_status("% SZS status Theorem for x"), Verdict::unsat);
  EXPECT_EQ(parse_szs_status("# SZS status Unsatisfiable"), Verdict::unsat);
  EXPECT_EQ(parse_szs_status("SZS status Satisfiable"), Verdict::sat);
  EXPECT_EQ(parse_szs_status("SZS status Timeout"), Verdict::unknown);
  EXPECT_EQ(parse_szs_status("no status here"), Verdict::unknown);
  EXPECT_EQ(expand_prover_command("eprover --cpu-limit={timeout} {file}", "/tmp/a.p", 2.5),
            "eprover --cpu-limit=2.5 '/tmp/a.p'");
}

TEST(Distance, TransitivityFixture) {
  auto config = on("not_transitive.p");
  config.pairs = true;
  EXPECT_EQ(run(cmd_distance, config).out, "from,to,distance\n1,2,2\n1,3,inf\n2,3,2\n");

  config.pairs = false;
  config.source_clause = 1;
  config.target = 3;
  EXPECT_EQ(run(cmd_distance, config).out, "inf\n");

  auto csv = run(cmd_distance, on("not_transitive.p"));
  EXPECT_EQ(csv.out, "clause_id,distance\n1,2\n2,1\n3,2\n");
}

TEST(Distance, BoundedAndJson) {
  auto config = on("horn_goal.p");
  config.bound = 2;
  auto r = run(cmd_distance, config);
  EXPECT_NE(r.out.find("\n2,2\n3,inf\n"), std::string::npos) << r.out;
  config.json = true;
  auto j = nlohmann::json::parse(run(cmd_distance, config).out);
  EXPECT_EQ(j["distances"][0]["distance"], 1);
  EXPECT_EQ(j["distances"][10]["distance"], "inf");
  EXPECT_EQ(j["bound"], 2);
}

TEST(Path, WitnessValidates) {
  auto config = on("horn_goal.p");
  config.target = 11;
  auto r = run(cmd_path, config);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 -[~p ~ p]-> 2 -[~q3 ~ q3]-> 5 -[~r6 ~ r6]-> 11\n");

  auto apart = on("not_transitive.p");
  apart.source_clause = 1;
  apart.target = 3;
  EXPECT_EQ(run(cmd_path, apart).status, kExitError);
}

TEST(Split, WritesTptpAndSummary) {
  auto config = on("symmetry.p");
  config.split_clause = 1;
  config.split_variable = "X";
  auto r = run(cmd_split, config);
  auto set = parse_tptp_cnf(r.out);
  EXPECT_EQ(set.size(), 9u);
  EXPECT_NE(r.err.find("into 4 clauses: 7 8 9 10"), std::string::npos) << r.err;

  config.binary_split = true;
  config.json = true;
  auto j = nlohmann::json::parse(run(cmd_split, config).out);
  EXPECT_EQ(j["groups"].size(), 2u);

  auto ground = on("horn_goal.p");
  ground.split_clause = 1;
  EXPECT_THROW(run(cmd_split, ground), Error);
}

TEST(Radius, HornGoal) {
  auto r = run(cmd_radius, on("horn_goal.p"));
  EXPECT_EQ(r.out, "radius=4\nclauses=11\natoms=10 signed_literals=20 occurrences=20\n");
  EXPECT_EQ(run(cmd_radius, on("sat_small.cnf")).out.substr(0, 11), "radius=inf\n");
}

TEST(Stats, BoundedGeneratorParameters) {
  Rng rng(76);
  Scratch scratch;
  bool exact = false;
  for (int t = 0; t < 10 && !exact; ++t) {
    auto file = scratch.write("b.cnf", print_dimacs(random_bounded_set(rng, 3, 3, 60, 20)));
    RunConfig config;
    config.input = file;
    config.bound = 3;
    config.json = true;
    auto j = nlohmann::json::parse(run(cmd_stats, config).out);
    EXPECT_LE(j["b"].get<int>(), 3);
    EXPECT_LE(j["k"].get<int>(), 3);
    EXPECT_LE(j["relevant_clauses"].get<double>(), j["relevant_budget"].get<double>());
    if (j["b"] == 3 && j["k"] == 3) {
      config.json = false;
      auto text = run(cmd_stats, config).out;
      EXPECT_NE(text.find("b=3 k=3\n"), std::string::npos);
      EXPECT_NE(text.find("budget="), std::string::npos);
      exact = true;
    }
  }
  EXPECT_TRUE(exact);
}

TEST(Gen, FamiliesAndDeterminism) {
  RunConfig config;
  config.seed = 9;
  for (const char* family : {"ksat", "bounded", "core-tail", "horn", "hub", "fo"}) {
    config.family = family;
    config.branching = {2, 2};
    config.clauses = 12;
    config.vars = 8;
    config.hub_m = config.hub_p = 3;
    auto first = run(cmd_gen, config);
    EXPECT_EQ(first.out, run(cmd_gen, config).out) << family;
    EXPECT_FALSE(first.out.empty()) << family;
  }
  config.family = "ksat";
  config.output_format = InputFormat::tptp;
  EXPECT_EQ(parse_tptp_cnf(run(cmd_gen, config).out).size(), 12u);
  config.family = "nope";
  EXPECT_THROW(run(cmd_gen, config), Error);
}
