#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aprel/syntax.hpp"

namespace fixture {

std::string data_path(const std::string& name);

aprel::ClauseSet tptp(std::string_view text);
aprel::ClauseSet dimacs(std::string_view text);
aprel::ClauseSet load(const std::string& name);

/// The Horn goal tree: ~p, p <- q1 q2 q3, q_i <- two r facts, six r facts.
aprel::ClauseSet horn_goal();

std::vector<aprel::ClauseId> all_negative(const aprel::ClauseSet& set);
std::vector<aprel::ClauseId> all_positive(const aprel::ClauseSet& set);

}  // namespace fixture
