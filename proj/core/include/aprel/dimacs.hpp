#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "aprel/syntax.hpp"

namespace aprel {

/// Reads DIMACS CNF. Atoms become zero-arity predicates named by their
/// variable number; clause ids follow file order starting at 1.
ClauseSet parse_dimacs(std::string_view text, const std::string& source = "");
ClauseSet read_dimacs_file(const std::filesystem::path& path);

/// Writes `p cnf V C` followed by one 0-terminated line per clause. Atoms
/// that are not DIMACS integers are numbered in natural order and listed in
/// `c atom` comments. Throws Error for non-ground sets.
void write_dimacs(std::ostream& out, const ClauseSet& set);
std::string print_dimacs(const ClauseSet& set);

}  // namespace aprel
