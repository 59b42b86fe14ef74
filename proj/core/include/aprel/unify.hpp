#pragma once

#include <map>
#include <optional>

#include "aprel/syntax.hpp"

namespace aprel {

/// A finite map from variables to terms. Substitutions returned by `unify`
/// are idempotent: no bound variable occurs in any binding.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<VarId, Term> bindings) : bindings_(std::move(bindings)) {}

  const std::map<VarId, Term>& bindings() const noexcept { return bindings_; }
  const Term* lookup(VarId v) const;
  bool empty() const noexcept { return bindings_.empty(); }
  std::size_t size() const noexcept { return bindings_.size(); }

  Term apply(const Term& t) const;
  Literal apply(const Literal& l) const;

  /// The substitution that applies `*this` first and then `then`.
  Substitution compose(const Substitution& then) const;
  bool is_idempotent() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<VarId, Term> bindings_;
};

/// Most general unifier of two terms (or two atoms), with occurs check.
/// Variables of `a` and `b` are treated as one namespace; rename apart first
/// when they come from different clauses.
std::optional<Substitution> unify(const Term& a, const Term& b);

/// Unifies `a` with `b` shifted by `b_offset`, without copying `b`.
bool unifiable(const Term& a, const Term& b, VarId b_offset);

/// True iff there are substitutions α, β with Lα ≡ ¬Mβ. M's variables are
/// renamed apart from L's before unifying.
bool complementary_unifiable(const Literal& l, const Literal& m);

}  // namespace aprel
