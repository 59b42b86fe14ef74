#include "aprel/splitting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "aprel/unify.hpp"

namespace aprel {

namespace {

void count_functions(const Term& t, std::map<SymbolId, std::size_t>& counts) {
  if (t.is_variable()) return;
  ++counts[t.symbol()];
  for (const auto& a : t.args()) count_functions(a, counts);
}

std::map<SymbolId, std::size_t> function_counts(const ClauseSet& set) {
  std::map<SymbolId, std::size_t> counts;
  for (const auto& clause : set) {
    for (const auto& l : clause.literals()) {
      for (const auto& a : l.atom.args()) count_functions(a, counts);
    }
  }
  return counts;
}

std::optional<VarId> find_variable(const Clause& clause, std::string_view name) {
  const auto& names = clause.var_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<VarId>(it - names.begin());
}

const Clause& target_clause(const ClauseSet& set, ClauseId id) {
  if (!set.contains(id)) throw Error("unknown clause id " + std::to_string(id));
  return set.at(id);
}

std::vector<FunctionSymbol> with_extras(std::vector<FunctionSymbol> symbols,
                                        const std::vector<std::string>& extra_constants) {
  for (const auto& c : extra_constants) {
    FunctionSymbol s{c, 0};
    if (std::find(symbols.begin(), symbols.end(), s) == symbols.end()) symbols.push_back(s);
  }
  return symbols;
}

/// `symbol(_, ..., _)` with variables starting at `first_var`.
Term generic_instance(SymbolId symbol, std::size_t arity, VarId first_var) {
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) args.push_back(Term::variable(first_var + static_cast<VarId>(i)));
  return Term::compound(symbol, std::move(args));
}

}  // namespace

std::vector<FunctionSymbol> function_symbols(const ClauseSet& set) {
  std::vector<FunctionSymbol> out;
  for (const auto& [id, n] : function_counts(set)) {
    out.push_back({set.symbols().name(id), set.symbols().arity(id)});
  }
  return out;
}

SplitPlan full_split_plan(const ClauseSet& set, ClauseId clause, std::string variable,
                          const std::vector<std::string>& extra_constants) {
  SplitPlan plan{clause, std::move(variable), {}};
  for (auto& s : with_extras(function_symbols(set), extra_constants)) plan.groups.push_back({s});
  return plan;
}

SplitPlan binary_split_plan(const ClauseSet& set, ClauseId clause, std::string variable,
                            const std::vector<std::string>& extra_constants) {
  std::vector<std::pair<std::size_t, FunctionSymbol>> weighted;
  for (const auto& [id, n] : function_counts(set)) {
    weighted.push_back({n, {set.symbols().name(id), set.symbols().arity(id)}});
  }
  for (const auto& s : with_extras({}, extra_constants)) {
    bool known = std::any_of(weighted.begin(), weighted.end(),
                             [&](const auto& w) { return w.second == s; });
    if (!known) weighted.push_back({0, s});
  }
  if (weighted.size() < 2) throw Error("a binary split needs at least two function symbols");
  std::stable_sort(weighted.begin(), weighted.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  SplitPlan plan{clause, std::move(variable), {{}, {}}};
  std::size_t load[2] = {0, 0};
  for (auto& [n, s] : weighted) {
    bool lighter = load[0] < load[1] ||
                   (load[0] == load[1] && plan.groups[0].size() <= plan.groups[1].size());
    int g = lighter ? 0 : 1;
    load[g] += n;
    plan.groups[static_cast<std::size_t>(g)].push_back(s);
  }
  for (auto& g : plan.groups) std::sort(g.begin(), g.end());
  return plan;
}

SplitResult split_clause(const ClauseSet& set, const SplitPlan& plan) {
  const Clause& clause = target_clause(set, plan.clause);
  auto x = find_variable(clause, plan.variable);
  if (!x) {
    throw Error("variable " + plan.variable + " does not occur in clause " +
                std::to_string(plan.clause));
  }

  std::vector<FunctionSymbol> listed;
  for (const auto& g : plan.groups) {
    if (g.empty()) throw Error("split plan has an empty group");
    listed.insert(listed.end(), g.begin(), g.end());
  }
  std::vector<FunctionSymbol> sorted = listed;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("split plan groups overlap");
  }
  for (const auto& s : function_symbols(set)) {
    if (!std::binary_search(sorted.begin(), sorted.end(), s)) {
      throw Error("split plan misses function symbol " + s.name + "/" + std::to_string(s.arity));
    }
  }
  if (std::none_of(sorted.begin(), sorted.end(), [](const auto& s) { return s.arity == 0; })) {
    throw Error("splitting needs at least one constant symbol; supply one explicitly");
  }

  auto table = std::make_shared<SymbolTable>(set.symbols());
  std::set<std::string> taken;
  for (const auto& c : set) taken.insert(c.var_names().begin(), c.var_names().end());
  std::uint32_t counter = set.fresh_counter();
  auto fresh_name = [&] {
    std::string name;
    do name = "_sv" + std::to_string(++counter);
    while (taken.count(name));
    return name;
  };

  std::vector<Clause> replacements;
  std::vector<std::size_t> group_of;
  ClauseId next = set.next_id();
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    for (const auto& s : plan.groups[g]) {
      SymbolId id = table->intern(s.name, s.arity, SymbolKind::function);
      auto first = static_cast<VarId>(clause.variable_count());
      auto names = clause.var_names();
      for (std::size_t i = 0; i < s.arity; ++i) names.push_back(fresh_name());
      Substitution sigma({{*x, generic_instance(id, s.arity, first)}});
      std::vector<Literal> lits;
      for (const auto& l : clause.literals()) lits.push_back(sigma.apply(l));
      replacements.push_back(make_clause(next++, std::move(lits), std::move(names), *table));
      group_of.push_back(g);
    }
  }

  SplitResult result{ClauseSet(table, set.format()), {}, std::move(group_of)};
  result.set.set_declared_variables(set.declared_variables());
  result.set.set_fresh_counter(counter);
  std::size_t target_pos = *set.position(plan.clause);
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    if (pos != target_pos) result.set.add(set[pos], set.origin(pos));
  }
  const auto& origin = set.origin(target_pos);
  for (std::size_t i = 0; i < replacements.size(); ++i) {
    ClauseOrigin o = origin;
    if (!o.name.empty()) o.name += "_s" + std::to_string(i + 1);
    result.descendants.push_back(replacements[i].id());
    result.set.add(std::move(replacements[i]), std::move(o));
  }
  return result;
}

std::optional<std::string> choose_split_variable(const ClauseSet& set, ClauseId id) {
  const Clause& clause = target_clause(set, id);
  if (clause.is_ground()) return std::nullopt;
  auto counts = function_counts(set);
  if (std::none_of(counts.begin(), counts.end(),
                   [&](const auto& c) { return set.symbols().arity(c.first) == 0; })) {
    return std::nullopt;
  }

  // Partners of each literal among the other clauses.
  std::vector<std::vector<const Literal*>> partners(clause.size());
  for (const auto& other : set) {
    if (other.id() == id) continue;
    for (const auto& m : other.literals()) {
      for (std::size_t i = 0; i < clause.size(); ++i) {
        if (complementary_unifiable(clause[i], m)) partners[i].push_back(&m);
      }
    }
  }

  std::optional<std::string> best;
  std::size_t best_count = 0;
  auto first = static_cast<VarId>(clause.variable_count());
  for (VarId x = 0; x < clause.variable_count(); ++x) {
    std::size_t broken = 0;
    for (std::size_t i = 0; i < clause.size(); ++i) {
      if (partners[i].empty() || !clause[i].atom.contains_variable(x)) continue;
      for (const auto& [symbol, n] : counts) {
        Substitution sigma({{x, generic_instance(symbol, set.symbols().arity(symbol), first)}});
        Literal instance = sigma.apply(clause[i]);
        bool linked = std::any_of(partners[i].begin(), partners[i].end(),
                                  [&](const Literal* m) { return complementary_unifiable(instance, *m); });
        if (!linked) ++broken;
      }
    }
    if (broken > best_count) {
      best_count = broken;
      best = clause.var_names()[x];
    }
  }
  return best;
}

}  // namespace aprel
