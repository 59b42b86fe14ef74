#include "fixtures.hpp"

#include "aprel/dimacs.hpp"
#include "aprel/tptp.hpp"

#ifndef APREL_TEST_DATA
#error "APREL_TEST_DATA must point at tests/data"
#endif

namespace fixture {

std::string data_path(const std::string& name) { return std::string(APREL_TEST_DATA) + "/" + name; }

aprel::ClauseSet tptp(std::string_view text) { return aprel::parse_tptp_cnf(text, {}, "<test>"); }

aprel::ClauseSet dimacs(std::string_view text) { return aprel::parse_dimacs(text, "<test>"); }

aprel::ClauseSet load(const std::string& name) {
  auto path = data_path(name);
  if (name.size() > 4 && name.substr(name.size() - 4) == ".cnf") return aprel::read_dimacs_file(path);
  return aprel::read_tptp_file(path, {std::string(APREL_TEST_DATA)});
}

aprel::ClauseSet horn_goal() { return load("horn_goal.p"); }

namespace {

std::vector<aprel::ClauseId> by_sign(const aprel::ClauseSet& set, bool positive) {
  std::vector<aprel::ClauseId> out;
  for (const auto& c : set) {
    bool all = true;
    for (const auto& l : c.literals()) all = all && l.positive == positive;
    if (all && !c.empty()) out.push_back(c.id());
  }
  return out;
}

}  // namespace

std::vector<aprel::ClauseId> all_negative(const aprel::ClauseSet& set) { return by_sign(set, false); }
std::vector<aprel::ClauseId> all_positive(const aprel::ClauseSet& set) { return by_sign(set, true); }

}  // namespace fixture
