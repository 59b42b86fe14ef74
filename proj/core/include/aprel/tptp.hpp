#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "aprel/syntax.hpp"

namespace aprel {

struct TptpOptions {
  /// Directory against which `include('...')` paths are resolved. Empty means
  /// the current working directory.
  std::filesystem::path include_base;
};

/// Reads the CNF subset of TPTP: `cnf(name, role, l1 | ... | ln).` with roles
/// axiom, hypothesis and negated_conjecture, `~` negation, `=`/`!=` as the
/// binary predicate `=`, `$false` as the empty disjunction, and `include`
/// directives with optional name selection. Variables start with an upper
/// case letter or `_`.
ClauseSet parse_tptp_cnf(std::string_view text, const TptpOptions& options = {},
                         const std::string& source = "");
ClauseSet read_tptp_file(const std::filesystem::path& path, const TptpOptions& options = {});

/// One `cnf(...)` line per clause. Clauses without a name are printed as
/// `c<id>`; clauses without a role as axioms.
void write_tptp(std::ostream& out, const ClauseSet& set);
std::string print_tptp(const ClauseSet& set);

}  // namespace aprel
