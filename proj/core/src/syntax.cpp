#include "aprel/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace aprel {

ParseError::ParseError(std::string source, std::size_t line, const std::string& message)
    : Error((source.empty() ? std::string("<input>") : source) +
            (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

// ---------------------------------------------------------------------------
// SymbolTable

std::string SymbolTable::key(std::string_view name, SymbolKind kind) {
  std::string k(1, kind == SymbolKind::predicate ? 'P' : 'F');
  k.append(name);
  return k;
}

SymbolId SymbolTable::intern(std::string_view name, std::size_t arity, SymbolKind kind) {
  auto k = key(name, kind);
  if (auto it = index_.find(k); it != index_.end()) {
    const auto& info = symbols_[it->second];
    if (info.arity != arity) {
      throw Error("symbol '" + std::string(name) + "' used with arity " +
                  std::to_string(arity) + " and " + std::to_string(info.arity));
    }
    return it->second;
  }
  auto id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back({std::string(name), arity, kind});
  index_.emplace(std::move(k), id);
  return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view name, SymbolKind kind) const {
  if (auto it = index_.find(key(name, kind)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<SymbolId> SymbolTable::functions() const {
  std::vector<SymbolId> out;
  for (SymbolId i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].kind == SymbolKind::function) out.push_back(i);
  }
  return out;
}

std::vector<SymbolId> SymbolTable::constants() const {
  std::vector<SymbolId> out;
  for (SymbolId i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].kind == SymbolKind::function && symbols_[i].arity == 0) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Term

Term Term::variable(VarId id) { return Term(true, id, {}); }

Term Term::compound(SymbolId symbol, std::vector<Term> args) {
  return Term(false, symbol, std::move(args));
}

bool Term::is_ground() const noexcept {
  if (variable_) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

bool Term::contains_variable(VarId v) const noexcept {
  if (variable_) return id_ == v;
  return std::any_of(args_.begin(), args_.end(),
                     [v](const Term& a) { return a.contains_variable(v); });
}

VarId Term::variable_bound() const noexcept {
  if (variable_) return id_ + 1;
  VarId bound = 0;
  for (const auto& a : args_) bound = std::max(bound, a.variable_bound());
  return bound;
}

std::size_t Term::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

void Term::collect_variables(std::vector<VarId>& out) const {
  if (variable_) {
    if (std::find(out.begin(), out.end(), id_) == out.end()) out.push_back(id_);
    return;
  }
  for (const auto& a : args_) a.collect_variables(out);
}

Term Term::shifted(VarId offset) const {
  if (variable_) return variable(id_ + offset);
  if (args_.empty() || offset == 0) return *this;
  std::vector<Term> args;
  args.reserve(args_.size());
  for (const auto& a : args_) args.push_back(a.shifted(offset));
  return compound(id_, std::move(args));
}

Term Term::renamed(std::span<const VarId> map) const {
  if (variable_) return variable(map[id_]);
  if (args_.empty()) return *this;
  std::vector<Term> args;
  args.reserve(args_.size());
  for (const auto& a : args_) args.push_back(a.renamed(map));
  return compound(id_, std::move(args));
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.variable_ != b.variable_) return a.variable_ ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
  if (auto c = a.id_ <=> b.id_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(),
                                                b.args_.begin(), b.args_.end());
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = t.is_variable() ? 0x9e3779b97f4a7c15ULL : 0x85ebca6bULL;
  h ^= std::hash<std::uint32_t>{}(t.symbol()) + 0x9e3779b9 + (h << 6) + (h >> 2);
  for (const auto& a : t.args()) h ^= (*this)(a) + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// Literal / Clause

Literal negate(const Literal& literal) { return Literal{!literal.positive, literal.atom}; }

std::size_t LiteralHash::operator()(const Literal& l) const noexcept {
  return TermHash{}(l.atom) * 2 + (l.positive ? 1 : 0);
}

std::optional<std::size_t> Clause::index_of(const Literal& l) const {
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    if (literals_[i] == l) return i;
  }
  return std::nullopt;
}

Clause Clause::with_id(ClauseId id) const {
  Clause c = *this;
  c.id_ = id;
  return c;
}

Clause make_clause(ClauseId id, std::vector<Literal> literals,
                   std::vector<std::string> var_names, const SymbolTable& symbols) {
  struct Keyed {
    Literal literal;
    std::string text;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(literals.size());
  for (auto& l : literals) {
    auto text = format_atom(l.atom, symbols, var_names);
    keyed.push_back({std::move(l), std::move(text)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.literal.positive != b.literal.positive) return a.literal.positive;
    if (int c = natural_compare(a.text, b.text); c != 0) return c < 0;
    return a.literal.atom < b.literal.atom;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const Keyed& a, const Keyed& b) { return a.literal == b.literal; }),
              keyed.end());

  std::vector<VarId> order;
  for (const auto& k : keyed) k.literal.atom.collect_variables(order);
  VarId bound = 0;
  for (VarId v : order) bound = std::max(bound, v + 1);
  std::vector<VarId> map(bound, 0);
  std::vector<std::string> names;
  names.reserve(order.size());
  for (VarId i = 0; i < order.size(); ++i) {
    map[order[i]] = i;
    names.push_back(order[i] < var_names.size() ? var_names[order[i]]
                                                : "X" + std::to_string(order[i]));
  }

  Clause c;
  c.id_ = id;
  c.literals_.reserve(keyed.size());
  for (auto& k : keyed) {
    c.literals_.push_back(Literal{k.literal.positive, k.literal.atom.renamed(map)});
  }
  c.var_names_ = std::move(names);
  return c;
}

std::string_view role_name(Role role) {
  switch (role) {
    case Role::axiom: return "axiom";
    case Role::hypothesis: return "hypothesis";
    case Role::negated_conjecture: return "negated_conjecture";
    case Role::none: break;
  }
  return "axiom";
}

// ---------------------------------------------------------------------------
// ClauseSet

ClauseSet::ClauseSet() : symbols_(std::make_shared<SymbolTable>()) {}

ClauseSet::ClauseSet(std::shared_ptr<const SymbolTable> symbols, SourceFormat format)
    : symbols_(std::move(symbols)), format_(format) {
  if (!symbols_) symbols_ = std::make_shared<SymbolTable>();
}

void ClauseSet::add(Clause clause, ClauseOrigin origin) {
  if (!clauses_.empty() && clause.id() <= clauses_.back().id()) {
    throw Error("clause id " + std::to_string(clause.id()) + " is not above " +
                std::to_string(clauses_.back().id()));
  }
  clauses_.push_back(std::move(clause));
  origins_.push_back(std::move(origin));
}

std::optional<std::size_t> ClauseSet::position(ClauseId id) const {
  auto it = std::lower_bound(clauses_.begin(), clauses_.end(), id,
                             [](const Clause& c, ClauseId v) { return c.id() < v; });
  if (it == clauses_.end() || it->id() != id) return std::nullopt;
  return static_cast<std::size_t>(it - clauses_.begin());
}

const Clause& ClauseSet::at(ClauseId id) const {
  auto pos = position(id);
  if (!pos) throw Error("unknown clause id " + std::to_string(id));
  return clauses_[*pos];
}

ClauseId ClauseSet::next_id() const noexcept {
  return clauses_.empty() ? 1 : clauses_.back().id() + 1;
}

std::vector<ClauseId> ClauseSet::ids() const {
  std::vector<ClauseId> out;
  out.reserve(clauses_.size());
  for (const auto& c : clauses_) out.push_back(c.id());
  return out;
}

bool ClauseSet::is_ground() const noexcept {
  return std::all_of(clauses_.begin(), clauses_.end(),
                     [](const Clause& c) { return c.is_ground(); });
}

ClauseSet ClauseSet::empty_like() const {
  ClauseSet out(symbols_, format_);
  out.declared_variables_ = declared_variables_;
  out.fresh_counter_ = fresh_counter_;
  return out;
}

ClauseSet ClauseSet::subset(std::span<const ClauseId> ids) const {
  auto sorted = normalize_ids(std::vector<ClauseId>(ids.begin(), ids.end()));
  ClauseSet out = empty_like();
  for (ClauseId id : sorted) {
    auto pos = position(id);
    if (!pos) throw Error("unknown clause id " + std::to_string(id));
    out.add(clauses_[*pos], origins_[*pos]);
  }
  return out;
}

ClauseSet ClauseSet::filter(const std::function<bool(const Clause&)>& keep) const {
  ClauseSet out = empty_like();
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (keep(clauses_[i])) out.add(clauses_[i], origins_[i]);
  }
  return out;
}

bool ClauseSet::same_clauses(const ClauseSet& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (clauses_[i].id() != other.clauses_[i].id()) return false;
    if (symbols_ == other.symbols_) {
      if (!clauses_[i].same_content(other.clauses_[i])) return false;
    } else if (format_clause(clauses_[i], *symbols_) !=
               format_clause(other.clauses_[i], *other.symbols_)) {
      return false;
    }
  }
  return true;
}

std::string ClauseSet::literal_text(const Clause& clause, const Literal& literal) const {
  if (format_ == SourceFormat::dimacs && literal.atom.arity() == 0) {
    return (literal.positive ? "" : "-") + symbols_->name(literal.predicate());
  }
  return format_literal(literal, *symbols_, clause.var_names());
}

std::vector<ClauseId> normalize_ids(std::vector<ClauseId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

bool is_lower_word(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

bool is_integer(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch));
  });
}

}  // namespace

std::string quote_name(std::string_view name) {
  if (is_lower_word(name)) return std::string(name);
  std::string out = "'";
  for (char ch : name) {
    if (ch == '\'' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('\'');
  return out;
}

std::string format_term(const Term& t, const SymbolTable& symbols,
                        std::span<const std::string> var_names) {
  if (t.is_variable()) {
    return t.var() < var_names.size() ? var_names[t.var()] : "X" + std::to_string(t.var());
  }
  const auto& name = symbols.name(t.symbol());
  std::string out = is_integer(name) ? name : quote_name(name);
  if (t.arity() == 0) return out;
  out.push_back('(');
  bool first = true;
  for (const auto& a : t.args()) {
    if (!first) out.push_back(',');
    first = false;
    out += format_term(a, symbols, var_names);
  }
  out.push_back(')');
  return out;
}

std::string format_atom(const Term& atom, const SymbolTable& symbols,
                        std::span<const std::string> var_names) {
  if (atom.arity() == 2 && symbols.name(atom.symbol()) == "=") {
    return format_term(atom.args()[0], symbols, var_names) + " = " +
           format_term(atom.args()[1], symbols, var_names);
  }
  // Predicates are never integers in TPTP, so numeric names get quoted.
  const auto& name = symbols.name(atom.symbol());
  std::string out = quote_name(name);
  if (atom.arity() == 0) return out;
  out.push_back('(');
  bool first = true;
  for (const auto& a : atom.args()) {
    if (!first) out.push_back(',');
    first = false;
    out += format_term(a, symbols, var_names);
  }
  out.push_back(')');
  return out;
}

std::string format_literal(const Literal& l, const SymbolTable& symbols,
                           std::span<const std::string> var_names) {
  if (!l.positive && l.atom.arity() == 2 && symbols.name(l.atom.symbol()) == "=") {
    return format_term(l.atom.args()[0], symbols, var_names) + " != " +
           format_term(l.atom.args()[1], symbols, var_names);
  }
  auto atom = format_atom(l.atom, symbols, var_names);
  return l.positive ? atom : "~" + atom;
}

std::string format_clause(const Clause& c, const SymbolTable& symbols) {
  if (c.empty()) return "$false";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += " | ";
    out += format_literal(c[i], symbols, c.var_names());
  }
  return out;
}

int natural_compare(std::string_view a, std::string_view b) noexcept {
  std::size_t i = 0, j = 0;
  auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js ? -1 : 1;
      if (int c = a.substr(is, ie - is).compare(b.substr(js, je - js)); c != 0) {
        return c < 0 ? -1 : 1;
      }
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
    ++i;
    ++j;
  }
  if (i == a.size() && j == b.size()) return 0;
  return i == a.size() ? -1 : 1;
}

}  // namespace aprel
