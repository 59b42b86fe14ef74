#include "aprel/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "aprel/dpll.hpp"
#include "aprel/ground.hpp"

namespace aprel {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }

/// `count` distinct atoms from 1..atoms.
std::vector<int> pick_atoms(Rng& rng, int atoms, std::size_t count) {
  if (count * 4 < static_cast<std::size_t>(atoms)) {
    // Sparse draw: rejection is cheaper than materializing the pool.
    std::vector<int> out;
    while (out.size() < count) {
      int a = static_cast<int>(uniform(rng, 1, static_cast<std::size_t>(atoms)));
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    return out;
  }
  std::vector<int> pool(static_cast<std::size_t>(atoms));
  std::iota(pool.begin(), pool.end(), 1);
  count = std::min(count, pool.size());
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[uniform(rng, i, pool.size() - 1)]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace

ClauseSet prop_set(const std::vector<std::vector<int>>& clauses, int num_atoms) {
  auto symbols = std::make_shared<SymbolTable>();
  int top = num_atoms;
  for (const auto& c : clauses) {
    for (int l : c) top = std::max(top, std::abs(l));
  }
  std::vector<SymbolId> atom(static_cast<std::size_t>(top) + 1);
  for (int a = 1; a <= top; ++a) {
    atom[static_cast<std::size_t>(a)] = symbols->intern(std::to_string(a), 0, SymbolKind::predicate);
  }
  ClauseSet set(symbols, SourceFormat::dimacs);
  set.set_declared_variables(static_cast<std::size_t>(top));
  ClauseId id = 1;
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (int l : c) {
      if (l == 0) throw Error("literal 0 is not allowed");
      lits.push_back({l > 0, Term::compound(atom[static_cast<std::size_t>(std::abs(l))])});
    }
    set.add(make_clause(id++, std::move(lits), {}, *symbols));
  }
  return set;
}

ClauseSet named_set(const std::vector<std::vector<std::string>>& clauses) {
  auto symbols = std::make_shared<SymbolTable>();
  std::vector<std::vector<Literal>> built;
  for (const auto& c : clauses) {
    auto& lits = built.emplace_back();
    for (const auto& text : c) {
      bool negative = !text.empty() && text[0] == '~';
      auto name = negative ? text.substr(1) : text;
      lits.push_back({!negative, Term::compound(symbols->intern(name, 0, SymbolKind::predicate))});
    }
  }
  ClauseSet set(symbols, SourceFormat::tptp);
  ClauseId id = 1;
  for (auto& lits : built) set.add(make_clause(id++, std::move(lits), {}, *symbols));
  return set;
}

ClauseSet random_ground_set(Rng& rng, const GroundSetParams& params) {
  std::size_t n = uniform(rng, params.min_clauses, params.max_clauses);
  std::vector<std::vector<int>> clauses;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t width = uniform(rng, params.allow_empty ? 0 : 1, params.max_width);
    auto atoms = pick_atoms(rng, params.atoms, width);
    for (int& a : atoms) a = coin(rng) ? a : -a;
    clauses.push_back(std::move(atoms));
  }
  return prop_set(clauses, params.atoms);
}

ClauseSet random_ksat(Rng& rng, int vars, std::size_t clauses, std::size_t k) {
  std::vector<std::vector<int>> out;
  out.reserve(clauses);
  for (std::size_t i = 0; i < clauses; ++i) {
    auto atoms = pick_atoms(rng, vars, k);
    for (int& a : atoms) a = coin(rng) ? a : -a;
    out.push_back(std::move(atoms));
  }
  return prop_set(out, vars);
}

ClauseSet random_first_order_set(Rng& rng, const FirstOrderParams& params) {
  auto symbols = std::make_shared<SymbolTable>();
  std::vector<SymbolId> preds, funcs, consts;
  for (std::size_t i = 0; i < params.predicates; ++i) {
    preds.push_back(symbols->intern("p" + std::to_string(i), 1 + i % 2, SymbolKind::predicate));
  }
  for (std::size_t i = 0; i < params.functions; ++i) {
    funcs.push_back(symbols->intern("f" + std::to_string(i), 1, SymbolKind::function));
  }
  for (std::size_t i = 0; i < std::max<std::size_t>(params.constants, 1); ++i) {
    consts.push_back(symbols->intern("a" + std::to_string(i), 0, SymbolKind::function));
  }
  std::vector<std::string> var_names;
  for (std::size_t i = 0; i < params.variables; ++i) var_names.push_back("X" + std::to_string(i));

  auto random_term = [&](auto&& self, std::size_t depth) -> Term {
    std::size_t choices = params.variables + consts.size() + (depth > 1 ? funcs.size() : 0);
    std::size_t pick = uniform(rng, 0, choices - 1);
    if (pick < params.variables) return Term::variable(static_cast<VarId>(pick));
    pick -= params.variables;
    if (pick < consts.size()) return Term::compound(consts[pick]);
    pick -= consts.size();
    return Term::compound(funcs[pick], {self(self, depth - 1)});
  };

  ClauseSet set(symbols, SourceFormat::tptp);
  std::size_t n = uniform(rng, params.min_clauses, params.max_clauses);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t width = uniform(rng, 1, params.max_width);
    std::vector<Literal> lits;
    for (std::size_t j = 0; j < width; ++j) {
      SymbolId p = preds[uniform(rng, 0, preds.size() - 1)];
      std::vector<Term> args;
      for (std::size_t a = 0; a < symbols->arity(p); ++a) {
        args.push_back(random_term(random_term, params.max_depth));
      }
      lits.push_back({coin(rng), Term::compound(p, std::move(args))});
    }
    set.add(make_clause(static_cast<ClauseId>(i + 1), std::move(lits), var_names, *symbols));
  }
  return set;
}

ClauseSet random_bounded_set(Rng& rng, std::size_t b, std::size_t k, std::size_t clauses,
                             int atoms) {
  // Remaining capacity per signed literal: index 2a for a, 2a+1 for -a.
  std::vector<std::size_t> room(2 * static_cast<std::size_t>(atoms) + 2, b);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < clauses; ++i) {
    std::size_t width = uniform(rng, 1, k);
    std::vector<int> clause;
    for (int a : pick_atoms(rng, atoms, static_cast<std::size_t>(atoms))) {
      if (clause.size() == width) break;
      int lit = coin(rng) ? a : -a;
      auto slot = [&](int l) -> std::size_t& {
        return room[2 * static_cast<std::size_t>(std::abs(l)) + (l < 0 ? 1 : 0)];
      };
      if (slot(lit) == 0) lit = -lit;
      if (slot(lit) == 0) continue;
      --slot(lit);
      clause.push_back(lit);
    }
    if (clause.empty()) break;  // every literal is used up
    out.push_back(std::move(clause));
  }
  return prop_set(out, atoms);
}

ClauseSet horn_tree(const std::vector<std::size_t>& branching) {
  auto name = [](std::size_t level, std::size_t index) {
    std::string letter(1, static_cast<char>('p' + level % 11));
    return level == 0 ? letter : letter + std::to_string(index + 1);
  };
  std::vector<std::vector<std::string>> clauses{{"~p"}};
  std::size_t width = 1;
  for (std::size_t level = 0; level < branching.size(); ++level) {
    std::size_t b = branching[level];
    for (std::size_t node = 0; node < width; ++node) {
      std::vector<std::string> rule{name(level, node)};
      for (std::size_t c = 0; c < b; ++c) rule.push_back("~" + name(level + 1, node * b + c));
      clauses.push_back(std::move(rule));
    }
    width *= b;
  }
  for (std::size_t leaf = 0; leaf < width; ++leaf) clauses.push_back({name(branching.size(), leaf)});
  return named_set(clauses);
}

ClauseSet hub_fixture(std::size_t m, std::size_t n) {
  std::vector<std::vector<std::string>> clauses;
  for (std::size_t i = 1; i <= m; ++i) clauses.push_back({"p", "a" + std::to_string(i)});
  for (std::size_t j = 1; j <= n; ++j) clauses.push_back({"~p", "b" + std::to_string(j)});
  return named_set(clauses);
}

ClauseSet core_and_tail(Rng& rng, int core_atoms, int tail_atoms, std::size_t tail_clauses) {
  std::vector<std::vector<int>> core;
  while (true) {
    core.clear();
    for (std::size_t i = 0; i < static_cast<std::size_t>(6 * core_atoms); ++i) {
      auto atoms = pick_atoms(rng, core_atoms, 3);
      for (int& a : atoms) a = coin(rng) ? a : -a;
      core.push_back(std::move(atoms));
    }
    if (dpll(to_prop(prop_set(core, core_atoms))).verdict == Verdict::unsat) break;
  }
  auto clauses = core;
  for (std::size_t i = 0; i < tail_clauses; ++i) {
    auto atoms = pick_atoms(rng, tail_atoms, 3);
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      atoms[j] += core_atoms;
      if (j > 0 && coin(rng)) atoms[j] = -atoms[j];
    }
    clauses.push_back(std::move(atoms));
  }
  return prop_set(clauses, core_atoms + tail_atoms);
}

}  // namespace aprel
