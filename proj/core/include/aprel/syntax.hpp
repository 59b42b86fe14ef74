#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aprel/error.hpp"

namespace aprel {

using SymbolId = std::uint32_t;
using VarId = std::uint32_t;
using ClauseId = std::uint32_t;

enum class SymbolKind : std::uint8_t { predicate, function };

struct SymbolInfo {
  std::string name;
  std::size_t arity = 0;
  SymbolKind kind = SymbolKind::function;
};

/// Predicate and function symbols of a clause set. Predicates and functions
/// live in separate namespaces but share one id space, so an atom's head can
/// never collide with a term's head.
class SymbolTable {
 public:
  /// Returns the id of `name` in the namespace `kind`, creating it on first
  /// use. Throws Error when the symbol already exists at another arity.
  SymbolId intern(std::string_view name, std::size_t arity, SymbolKind kind);

  std::optional<SymbolId> find(std::string_view name, SymbolKind kind) const;
  const SymbolInfo& info(SymbolId id) const { return symbols_.at(id); }
  const std::string& name(SymbolId id) const { return info(id).name; }
  std::size_t arity(SymbolId id) const { return info(id).arity; }
  std::size_t size() const noexcept { return symbols_.size(); }

  /// Function symbols including constants, in id order.
  std::vector<SymbolId> functions() const;
  std::vector<SymbolId> constants() const;

 private:
  static std::string key(std::string_view name, SymbolKind kind);

  std::vector<SymbolInfo> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
};

class Term {
 public:
  Term() = default;

  static Term variable(VarId id);
  static Term compound(SymbolId symbol, std::vector<Term> args = {});

  bool is_variable() const noexcept { return variable_; }
  VarId var() const noexcept { return id_; }
  SymbolId symbol() const noexcept { return id_; }
  std::span<const Term> args() const noexcept { return args_; }
  std::size_t arity() const noexcept { return args_.size(); }

  bool is_ground() const noexcept;
  bool contains_variable(VarId v) const noexcept;
  /// 1 + the largest variable id occurring, or 0 for ground terms.
  VarId variable_bound() const noexcept;
  /// Constants and variables have depth 1.
  std::size_t depth() const noexcept;
  /// Appends variables in first-occurrence order, skipping ones already present.
  void collect_variables(std::vector<VarId>& out) const;

  Term shifted(VarId offset) const;
  /// Replaces variables through `map` (indexed by old id).
  Term renamed(std::span<const VarId> map) const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(bool variable, std::uint32_t id, std::vector<Term> args)
      : variable_(variable), id_(id), args_(std::move(args)) {}

  bool variable_ = false;
  std::uint32_t id_ = 0;
  std::vector<Term> args_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

struct Literal {
  bool positive = true;
  Term atom;

  SymbolId predicate() const noexcept { return atom.symbol(); }
  bool is_ground() const noexcept { return atom.is_ground(); }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Flips the sign. Negation is stored as a flag, so double negation never
/// appears.
Literal negate(const Literal& literal);

struct LiteralHash {
  std::size_t operator()(const Literal& l) const noexcept;
};

/// A finite set of literals. Variables are clause-local: ids index
/// `var_names()` and are numbered by first occurrence.
class Clause {
 public:
  Clause() = default;

  ClauseId id() const noexcept { return id_; }
  std::span<const Literal> literals() const noexcept { return literals_; }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  std::size_t size() const noexcept { return literals_.size(); }
  bool empty() const noexcept { return literals_.empty(); }
  const std::vector<std::string>& var_names() const noexcept { return var_names_; }
  std::size_t variable_count() const noexcept { return var_names_.size(); }
  bool is_ground() const noexcept { return var_names_.empty(); }

  std::optional<std::size_t> index_of(const Literal& l) const;
  bool contains(const Literal& l) const { return index_of(l).has_value(); }

  Clause with_id(ClauseId id) const;

  /// Same literals and variable names; ids are ignored.
  bool same_content(const Clause& other) const {
    return literals_ == other.literals_ && var_names_ == other.var_names_;
  }

 private:
  friend Clause make_clause(ClauseId, std::vector<Literal>, std::vector<std::string>,
                            const SymbolTable&);

  ClauseId id_ = 0;
  std::vector<Literal> literals_;
  std::vector<std::string> var_names_;
};

/// Builds a clause in canonical form: duplicate literals merged, literals
/// sorted positive-first then by natural order of their printed atom,
/// variables renumbered by first occurrence and unused names dropped.
Clause make_clause(ClauseId id, std::vector<Literal> literals,
                   std::vector<std::string> var_names, const SymbolTable& symbols);

enum class Role : std::uint8_t { none, axiom, hypothesis, negated_conjecture };
enum class SourceFormat : std::uint8_t { dimacs, tptp };

std::string_view role_name(Role role);

struct ClauseOrigin {
  std::string name;
  Role role = Role::none;
  std::size_t line = 0;
  std::string source;
};

/// Clauses ordered by ascending id. Ids survive every subset operation.
class ClauseSet {
 public:
  ClauseSet();
  explicit ClauseSet(std::shared_ptr<const SymbolTable> symbols,
                     SourceFormat format = SourceFormat::tptp);

  /// Appends a clause whose id exceeds every id already present.
  void add(Clause clause, ClauseOrigin origin = {});

  std::size_t size() const noexcept { return clauses_.size(); }
  bool empty() const noexcept { return clauses_.empty(); }
  const Clause& operator[](std::size_t pos) const { return clauses_[pos]; }
  const ClauseOrigin& origin(std::size_t pos) const { return origins_[pos]; }
  std::span<const Clause> clauses() const noexcept { return clauses_; }
  auto begin() const noexcept { return clauses_.begin(); }
  auto end() const noexcept { return clauses_.end(); }

  std::optional<std::size_t> position(ClauseId id) const;
  bool contains(ClauseId id) const { return position(id).has_value(); }
  /// Throws Error for unknown ids.
  const Clause& at(ClauseId id) const;
  ClauseId next_id() const noexcept;
  std::vector<ClauseId> ids() const;

  const SymbolTable& symbols() const noexcept { return *symbols_; }
  const std::shared_ptr<const SymbolTable>& shared_symbols() const noexcept {
    return symbols_;
  }
  SourceFormat format() const noexcept { return format_; }
  void set_format(SourceFormat f) noexcept { format_ = f; }

  std::optional<std::size_t> declared_variables() const noexcept { return declared_variables_; }
  void set_declared_variables(std::optional<std::size_t> n) noexcept { declared_variables_ = n; }
  std::uint32_t fresh_counter() const noexcept { return fresh_counter_; }
  void set_fresh_counter(std::uint32_t n) noexcept { fresh_counter_ = n; }

  bool is_ground() const noexcept;

  /// Clauses whose ids are in `ids` (any order, duplicates ignored). Throws on
  /// unknown ids.
  ClauseSet subset(std::span<const ClauseId> ids) const;
  ClauseSet filter(const std::function<bool(const Clause&)>& keep) const;
  /// Copy with the same metadata and no clauses.
  ClauseSet empty_like() const;

  /// Literal rendered in the set's source style: signed integers for DIMACS
  /// atoms, TPTP syntax otherwise.
  std::string literal_text(const Clause& clause, const Literal& literal) const;

  /// Same clause content in the same order; origins and metadata ignored.
  /// Sets over different symbol tables are compared by symbol name.
  bool same_clauses(const ClauseSet& other) const;

 private:
  std::shared_ptr<const SymbolTable> symbols_;
  std::vector<Clause> clauses_;
  std::vector<ClauseOrigin> origins_;
  SourceFormat format_ = SourceFormat::tptp;
  std::optional<std::size_t> declared_variables_;
  std::uint32_t fresh_counter_ = 0;
};

/// Sorted, duplicate-free clause ids.
std::vector<ClauseId> normalize_ids(std::vector<ClauseId> ids);

// Printing in TPTP syntax.
std::string format_term(const Term& t, const SymbolTable& symbols,
                        std::span<const std::string> var_names);
std::string format_atom(const Term& atom, const SymbolTable& symbols,
                        std::span<const std::string> var_names);
std::string format_literal(const Literal& l, const SymbolTable& symbols,
                           std::span<const std::string> var_names);
/// `p(X) | ~q(X)`, or `$false` for the empty clause.
std::string format_clause(const Clause& c, const SymbolTable& symbols);

/// Name quoting for TPTP: lower_word names pass through, others are quoted.
std::string quote_name(std::string_view name);

/// Three-way comparison where maximal digit runs compare numerically.
int natural_compare(std::string_view a, std::string_view b) noexcept;

}  // namespace aprel
