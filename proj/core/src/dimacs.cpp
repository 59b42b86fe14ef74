#include "aprel/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "aprel/ground.hpp"

namespace aprel {

namespace {

bool parse_long(std::string_view token, long& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

ClauseSet parse_dimacs(std::string_view text, const std::string& source) {
  auto symbols = std::make_shared<SymbolTable>();
  std::vector<std::pair<std::vector<long>, std::size_t>> raw;  // literals, start line
  long declared_vars = -1;
  long declared_clauses = -1;
  std::vector<long> current;
  std::size_t current_line = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (tokens[0] == "c" || tokens[0][0] == 'c') continue;
    if (tokens[0] == "%") break;  // SATLIB trailer
    if (tokens[0] == "p") {
      if (declared_vars >= 0) throw ParseError(source, line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf" || !parse_long(tokens[2], declared_vars) ||
          !parse_long(tokens[3], declared_clauses) || declared_vars < 0 || declared_clauses < 0) {
        declared_vars = -1;
        throw ParseError(source, line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      continue;
    }
    if (declared_vars < 0) throw ParseError(source, line_no, "clause before 'p cnf' header");
    for (auto token : tokens) {
      long lit = 0;
      if (!parse_long(token, lit)) {
        throw ParseError(source, line_no, "invalid literal '" + std::string(token) + "'");
      }
      if (lit == 0) {
        if (token[0] == '-') throw ParseError(source, line_no, "literal index 0 inside clause");
        std::size_t start = current.empty() ? line_no : current_line;
        raw.emplace_back(std::move(current), start);
        current.clear();
        current_line = 0;
        continue;
      }
      if (std::labs(lit) > declared_vars) {
        throw ParseError(source, line_no,
                         "literal " + std::to_string(lit) + " exceeds declared variable count " +
                             std::to_string(declared_vars));
      }
      if (current.empty()) current_line = line_no;
      current.push_back(lit);
    }
    if (eol == text.size()) break;
  }
  if (declared_vars < 0) throw ParseError(source, line_no, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(source, current_line, "clause not terminated by 0");
  if (static_cast<long>(raw.size()) != declared_clauses) {
    throw ParseError(source, line_no,
                     "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(raw.size()));
  }

  std::vector<SymbolId> atom_symbol(static_cast<std::size_t>(declared_vars) + 1, 0);
  for (long v = 1; v <= declared_vars; ++v) {
    atom_symbol[static_cast<std::size_t>(v)] =
        symbols->intern(std::to_string(v), 0, SymbolKind::predicate);
  }
  ClauseSet set(symbols, SourceFormat::dimacs);
  set.set_declared_variables(static_cast<std::size_t>(declared_vars));
  ClauseId id = 1;
  for (auto& [lits, line] : raw) {
    std::vector<Literal> literals;
    literals.reserve(lits.size());
    for (long l : lits) {
      literals.push_back(
          Literal{l > 0, Term::compound(atom_symbol[static_cast<std::size_t>(std::labs(l))])});
    }
    set.add(make_clause(id, std::move(literals), {}, *symbols),
            ClauseOrigin{"", Role::none, line, source});
    ++id;
  }
  return set;
}

ClauseSet read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dimacs(buffer.str(), path.string());
}

void write_dimacs(std::ostream& out, const ClauseSet& set) {
  AtomTable atoms = AtomTable::build(set);
  bool numeric = true;
  for (int a = 1; a <= atoms.size() && numeric; ++a) numeric = atoms.dimacs_number(a).has_value();

  std::vector<long> number(static_cast<std::size_t>(atoms.size()) + 1, 0);
  long max_var = 0;
  for (int a = 1; a <= atoms.size(); ++a) {
    number[static_cast<std::size_t>(a)] = numeric ? *atoms.dimacs_number(a) : a;
    max_var = std::max(max_var, number[static_cast<std::size_t>(a)]);
    if (!numeric) out << "c atom " << a << ' ' << atoms.name(a) << '\n';
  }
  if (numeric && set.declared_variables()) {
    max_var = std::max(max_var, static_cast<long>(*set.declared_variables()));
  }
  out << "p cnf " << max_var << ' ' << set.size() << '\n';
  for (const auto& clause : set) {
    for (const auto& l : clause.literals()) {
      long n = number[static_cast<std::size_t>(atoms.id(l.atom))];
      out << (l.positive ? n : -n) << ' ';
    }
    out << "0\n";
  }
}

std::string print_dimacs(const ClauseSet& set) {
  std::ostringstream out;
  write_dimacs(out, set);
  return out.str();
}

}  // namespace aprel
