#include "aprel/unify.hpp"

#include <algorithm>

namespace aprel {

namespace {

// Robinson unification over (term, variable offset) pairs. Bindings are
// triangular; `deref` follows them to a representative, so each variable
// class behaves like a union-find set whose root is either unbound or bound
// to a compound term.
class Unifier {
 public:
  struct Ref {
    const Term* term;
    VarId offset;
  };

  explicit Unifier(VarId variable_bound) : bind_(variable_bound) {}

  bool unify(Ref a, Ref b) {
    a = deref(a);
    b = deref(b);
    if (a.term->is_variable() && b.term->is_variable()) {
      VarId va = a.term->var() + a.offset;
      VarId vb = b.term->var() + b.offset;
      if (va != vb) bind(va, b);
      return true;
    }
    if (a.term->is_variable()) return bind_checked(a.term->var() + a.offset, b);
    if (b.term->is_variable()) return bind_checked(b.term->var() + b.offset, a);
    if (a.term->symbol() != b.term->symbol() || a.term->arity() != b.term->arity()) {
      return false;
    }
    auto aa = a.term->args();
    auto ba = b.term->args();
    for (std::size_t i = 0; i < aa.size(); ++i) {
      if (!unify(Ref{&aa[i], a.offset}, Ref{&ba[i], b.offset})) return false;
    }
    return true;
  }

  Term resolve(Ref r) const {
    r = deref(r);
    if (r.term->is_variable()) return Term::variable(r.term->var() + r.offset);
    if (r.term->arity() == 0) return *r.term;
    std::vector<Term> args;
    args.reserve(r.term->arity());
    for (const auto& a : r.term->args()) args.push_back(resolve(Ref{&a, r.offset}));
    return Term::compound(r.term->symbol(), std::move(args));
  }

  Substitution result() const {
    std::map<VarId, Term> out;
    for (VarId v = 0; v < bind_.size(); ++v) {
      if (!bind_[v]) continue;
      Term var = Term::variable(v);
      Term value = resolve(Ref{&var, 0});
      if (value != var) out.emplace(v, std::move(value));
    }
    return Substitution(std::move(out));
  }

 private:
  Ref deref(Ref r) const {
    while (r.term->is_variable()) {
      const auto& b = bind_[r.term->var() + r.offset];
      if (!b) break;
      r = *b;
    }
    return r;
  }

  void bind(VarId v, Ref r) { bind_[v] = r; }

  bool bind_checked(VarId v, Ref r) {
    if (occurs(v, r)) return false;
    bind(v, r);
    return true;
  }

  bool occurs(VarId v, Ref r) const {
    r = deref(r);
    if (r.term->is_variable()) return r.term->var() + r.offset == v;
    for (const auto& a : r.term->args()) {
      if (occurs(v, Ref{&a, r.offset})) return true;
    }
    return false;
  }

  std::vector<std::optional<Ref>> bind_;
};

}  // namespace

const Term* Substitution::lookup(VarId v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (t.is_variable()) {
    const Term* b = lookup(t.var());
    return b ? *b : t;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(apply(a));
  return Term::compound(t.symbol(), std::move(args));
}

Literal Substitution::apply(const Literal& l) const { return Literal{l.positive, apply(l.atom)}; }

Substitution Substitution::compose(const Substitution& then) const {
  std::map<VarId, Term> out;
  for (const auto& [v, t] : bindings_) {
    Term value = then.apply(t);
    if (!(value.is_variable() && value.var() == v)) out.emplace(v, std::move(value));
  }
  for (const auto& [v, t] : then.bindings_) {
    if (!bindings_.count(v)) out.emplace(v, t);
  }
  return Substitution(std::move(out));
}

bool Substitution::is_idempotent() const {
  for (const auto& [v, t] : bindings_) {
    for (const auto& [w, _] : bindings_) {
      if (t.contains_variable(w)) return false;
    }
  }
  return true;
}

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Unifier u(std::max(a.variable_bound(), b.variable_bound()));
  if (!u.unify({&a, 0}, {&b, 0})) return std::nullopt;
  return u.result();
}

bool unifiable(const Term& a, const Term& b, VarId b_offset) {
  if (a.symbol() != b.symbol() && !a.is_variable() && !b.is_variable()) return false;
  VarId bound = std::max(a.variable_bound(), b.variable_bound() + b_offset);
  Unifier u(bound);
  return u.unify({&a, 0}, {&b, b_offset});
}

bool complementary_unifiable(const Literal& l, const Literal& m) {
  if (l.positive == m.positive) return false;
  if (l.atom.symbol() != m.atom.symbol() || l.atom.arity() != m.atom.arity()) return false;
  if (l.is_ground() && m.is_ground()) return l.atom == m.atom;
  return unifiable(l.atom, m.atom, l.atom.variable_bound());
}

}  // namespace aprel
