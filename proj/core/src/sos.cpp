#include "aprel/sos.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace aprel {

PropClause resolve(const PropClause& a, const PropClause& b, int atom) {
  atom = std::abs(atom);
  int from_a = 0;
  if (a.contains(atom) && b.contains(-atom)) {
    from_a = atom;
  } else if (a.contains(-atom) && b.contains(atom)) {
    from_a = -atom;
  } else {
    throw Error("atom " + std::to_string(atom) + " is not complementary between the parents");
  }
  std::vector<int> lits;
  lits.reserve(a.size() + b.size());
  for (int l : a.lits) {
    if (l != from_a) lits.push_back(l);
  }
  for (int l : b.lits) {
    if (l != -from_a) lits.push_back(l);
  }
  return make_prop_clause(0, std::move(lits));
}

std::size_t ResolutionSequence::resolutions() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const auto& s) { return !s.is_input(); }));
}

std::vector<ClauseId> ResolutionSequence::input_ids() const {
  std::vector<ClauseId> out;
  for (const auto& s : steps) {
    if (s.is_input()) out.push_back(s.clause.id);
  }
  return out;
}

std::string_view sos_status_name(SosStatus s) {
  switch (s) {
    case SosStatus::refuted: return "refuted";
    case SosStatus::saturated: return "saturated";
    case SosStatus::limit: return "limit";
  }
  return "limit";
}

PathCheck validate_sequence(const ResolutionSequence& seq, const PropCnf& set,
                            std::span<const ClauseId> support, bool require_sos) {
  auto fail = [](std::size_t i, const std::string& why) {
    return PathCheck{false, "step " + std::to_string(i) + ": " + why};
  };
  std::unordered_map<ClauseId, const PropClause*> inputs;
  for (const auto& c : set.clauses) inputs.emplace(c.id, &c);
  std::set<ClauseId> supported_ids(support.begin(), support.end());

  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& step = seq.steps[i];
    std::size_t n = i + 1;
    if (step.is_input()) {
      auto it = inputs.find(step.clause.id);
      if (it == inputs.end()) return fail(n, "clause " + std::to_string(step.clause.id) + " is not in the input");
      if (it->second->lits != step.clause.lits) return fail(n, "input clause content differs");
      if (step.supported != (supported_ids.count(step.clause.id) > 0)) {
        return fail(n, "supported flag of an input clause must match membership in the support");
      }
      continue;
    }
    auto [j, k] = *step.parents;
    if (j < 1 || k < 1 || j >= n || k >= n) return fail(n, "parents must precede the resolvent");
    const auto& pj = seq.steps[j - 1];
    const auto& pk = seq.steps[k - 1];
    PropClause expected;
    try {
      expected = resolve(pj.clause, pk.clause, step.atom);
    } catch (const Error& e) {
      return fail(n, e.what());
    }
    if (expected.lits != step.clause.lits) return fail(n, "clause is not the resolvent of its parents");
    if (step.supported != (pj.supported || pk.supported)) {
      return fail(n, "supported flag must be set exactly when a parent is supported");
    }
    if (require_sos && !step.supported) return fail(n, "resolvent has no supported parent");
  }
  return {true, ""};
}

namespace {

struct Record {
  PropClause clause;
  int first = -1;  // supported parent
  int second = -1;
  int atom = 0;
  bool supported = false;
  bool input() const { return first < 0; }
};

ResolutionSequence extract_proof(const std::vector<Record>& records, std::size_t goal) {
  std::vector<char> needed(records.size(), 0);
  std::vector<std::size_t> stack{goal};
  while (!stack.empty()) {
    auto r = stack.back();
    stack.pop_back();
    if (needed[r]) continue;
    needed[r] = 1;
    if (!records[r].input()) {
      stack.push_back(static_cast<std::size_t>(records[r].first));
      stack.push_back(static_cast<std::size_t>(records[r].second));
    }
  }
  ResolutionSequence seq;
  std::vector<std::size_t> position(records.size(), 0);
  auto emit = [&](std::size_t r) {
    const auto& rec = records[r];
    ResolutionStep step{rec.clause, std::nullopt, rec.atom, rec.supported};
    if (!rec.input()) {
      step.parents = std::make_pair(position[static_cast<std::size_t>(rec.first)],
                                    position[static_cast<std::size_t>(rec.second)]);
    }
    seq.steps.push_back(std::move(step));
    position[r] = seq.steps.size();
  };
  if (records[goal].input()) {
    emit(goal);
    return seq;
  }
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (!needed[r] || records[r].input()) continue;
    for (int p : {records[r].first, records[r].second}) {
      auto parent = static_cast<std::size_t>(p);
      if (records[parent].input() && position[parent] == 0) emit(parent);
    }
    emit(r);
  }
  return seq;
}

}  // namespace

namespace {

bool literal_order(int a, int b) {
  int aa = std::abs(a), bb = std::abs(b);
  return aa != bb ? aa < bb : a < b;
}

bool subsumes(const PropClause& general, const PropClause& specific) {
  return general.size() <= specific.size() &&
         std::includes(specific.lits.begin(), specific.lits.end(), general.lits.begin(),
                       general.lits.end(), literal_order);
}

}  // namespace

SosOutcome sos_refute(const PropCnf& set, std::span<const ClauseId> support,
                      const SosLimits& limits) {
  std::set<ClauseId> supported_ids;
  for (ClauseId id : support) {
    bool present = std::any_of(set.clauses.begin(), set.clauses.end(),
                               [&](const PropClause& c) { return c.id == id; });
    if (!present) throw Error("unknown clause id " + std::to_string(id) + " in support");
    supported_ids.insert(id);
  }

  SosOutcome outcome;
  std::vector<Record> records;
  std::unordered_map<int, std::vector<std::size_t>> occurrences;  // literal -> records
  // Supported records keyed by their first literal, for duplicate and
  // subsumption checks. Subsuming only with supported clauses keeps the
  // search complete.
  std::unordered_map<int, std::vector<std::size_t>> by_first;
  bool empty_supported = false;
  auto subsumed = [&](const PropClause& c) {
    if (empty_supported) return true;
    if (c.empty()) return false;
    if (!limits.forward_subsumption) {
      auto it = by_first.find(c.lits.front());
      return it != by_first.end() &&
             std::any_of(it->second.begin(), it->second.end(),
                         [&](std::size_t i) { return records[i].clause.lits == c.lits; });
    }
    for (int l : c.lits) {
      auto it = by_first.find(l);
      if (it == by_first.end()) continue;
      for (std::size_t i : it->second) {
        if (subsumes(records[i].clause, c)) return true;
      }
    }
    return false;
  };
  auto add = [&](Record rec) {
    std::size_t at = records.size();
    for (int l : rec.clause.lits) occurrences[l].push_back(at);
    if (rec.supported) {
      if (rec.clause.empty()) empty_supported = true;
      else by_first[rec.clause.lits.front()].push_back(at);
    }
    records.push_back(std::move(rec));
    return at;
  };

  std::vector<std::size_t> frontier;
  for (const auto& c : set.clauses) {
    bool supported = supported_ids.count(c.id) > 0;
    std::size_t at = add({c, -1, -1, 0, supported});
    if (!supported) continue;
    if (c.empty()) {
      outcome.status = SosStatus::refuted;
      outcome.proof = extract_proof(records, at);
      return outcome;
    }
    frontier.push_back(at);
  }

  for (std::size_t level = 1; level <= limits.max_levels; ++level) {
    outcome.levels = level;
    std::vector<std::size_t> next;
    std::size_t pool = records.size();
    for (std::size_t f : frontier) {
      const PropClause active = records[f].clause;  // records may reallocate below
      for (int l : active.lits) {
        auto partners = occurrences.find(-l);
        if (partners == occurrences.end()) continue;
        // Index-based: the list grows while resolvents are added.
        for (std::size_t k = 0; k < partners->second.size(); ++k) {
          std::size_t r = partners->second[k];
          if (r >= pool) break;
          PropClause resolvent = resolve(active, records[r].clause, l);
          if (resolvent.is_tautology() || subsumed(resolvent)) continue;
          std::size_t at = add({std::move(resolvent), static_cast<int>(f), static_cast<int>(r),
                                std::abs(l), true});
          ++outcome.derived;
          if (records[at].clause.empty()) {
            outcome.status = SosStatus::refuted;
            outcome.proof = extract_proof(records, at);
            return outcome;
          }
          if (outcome.derived >= limits.max_clauses) {
            outcome.status = SosStatus::limit;
            return outcome;
          }
          next.push_back(at);
        }
      }
    }
    if (next.empty()) {
      outcome.status = SosStatus::saturated;
      return outcome;
    }
    frontier = std::move(next);
  }
  outcome.status = SosStatus::limit;
  return outcome;
}

bool verify_support_path_property(const ResolutionSequence& seq, const PropCnf& set,
                                  std::span<const ClauseId> support, const DistanceMap& map) {
  if (auto check = validate_sequence(seq, set, support, true); !check) {
    throw Error("not a set-of-support sequence: " + check.reason);
  }
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& step = seq.steps[i];
    if (step.is_input() && !(map.distance(step.clause.id) <= static_cast<std::uint32_t>(i + 1))) {
      return false;
    }
  }
  return true;
}

namespace {

std::string literal_name(int lit, const ClauseSet& source, const AtomTable& atoms) {
  int a = std::abs(lit);
  if (source.format() == SourceFormat::dimacs) {
    if (auto n = atoms.dimacs_number(a)) return std::to_string(lit > 0 ? *n : -*n);
  }
  return format_literal(Literal{lit > 0, atoms.atom(a)}, source.symbols(), {});
}

}  // namespace

std::string format_prop_clause(const PropClause& clause, const ClauseSet& source,
                               const AtomTable& atoms) {
  if (clause.empty()) return "$false";
  std::string out;
  for (int l : clause.lits) {
    if (!out.empty()) out += " | ";
    out += literal_name(l, source, atoms);
  }
  return out;
}

void write_refutation(std::ostream& out, const ResolutionSequence& seq, const ClauseSet& source,
                      const AtomTable& atoms) {
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& s = seq.steps[i];
    out << i + 1 << ". " << format_prop_clause(s.clause, source, atoms) << "  [";
    if (s.is_input()) {
      out << "input";
    } else {
      out << "resolve(" << s.parents->first << ',' << s.parents->second << ") on "
          << literal_name(s.atom, source, atoms);
    }
    out << "]  supported=" << (s.supported ? "true" : "false") << '\n';
  }
}

namespace {

/// Iterative-deepening linear input resolution on a Horn set: the goal's
/// smallest atom is resolved against a definite clause with that head.
class LinearSearch {
 public:
  LinearSearch(const PropCnf& cnf) : cnf_(cnf) {
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
      const auto& c = cnf.clauses[i];
      for (int l : c.lits) {
        if (l > 0) by_head_[l].push_back(i);
      }
    }
  }

  /// Shortest refutation from one of the goals with at most `max_length`
  /// resolutions; node budget guards against runaway branching.
  std::optional<ResolutionSequence> run(const std::vector<std::size_t>& goals,
                                        std::size_t max_length) {
    for (std::size_t bound = 1; bound <= max_length; ++bound) {
      for (std::size_t g : goals) {
        chain_.clear();
        std::vector<int> goal;
        for (int l : cnf_.clauses[g].lits) goal.push_back(-l);
        if (goal.empty()) return build(g);
        if (search(goal, bound)) return build(g);
        if (budget_ == 0) return std::nullopt;
      }
    }
    return std::nullopt;
  }

 private:
  bool search(const std::vector<int>& goal, std::size_t left) {
    if (goal.empty()) return true;
    if (goal.size() > left || budget_ == 0) return false;
    --budget_;
    int atom = goal.front();
    auto it = by_head_.find(atom);
    if (it == by_head_.end()) return false;
    for (std::size_t c : it->second) {
      std::vector<int> next(goal.begin() + 1, goal.end());
      for (int l : cnf_.clauses[c].lits) {
        if (l < 0) next.push_back(-l);
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      chain_.push_back({c, atom});
      if (search(next, left - 1)) return true;
      chain_.pop_back();
    }
    return false;
  }

  ResolutionSequence build(std::size_t goal) const {
    ResolutionSequence seq;
    seq.steps.push_back({cnf_.clauses[goal], std::nullopt, 0, true});
    for (auto [c, atom] : chain_) {
      std::size_t prev = seq.steps.size();
      seq.steps.push_back({cnf_.clauses[c], std::nullopt, 0, false});
      auto resolvent = resolve(seq.steps[prev - 1].clause, cnf_.clauses[c], atom);
      seq.steps.push_back({std::move(resolvent), std::make_pair(prev, prev + 1), atom, true});
    }
    return seq;
  }

  const PropCnf& cnf_;
  std::map<int, std::vector<std::size_t>> by_head_;
  std::vector<std::pair<std::size_t, int>> chain_;
  std::size_t budget_ = 20'000'000;
};

/// Levels of positive hyper-resolution until a goal clause fires, or 0.
std::size_t hyper_levels(const PropCnf& cnf) {
  std::vector<std::size_t> level(static_cast<std::size_t>(cnf.num_atoms) + 1, SIZE_MAX);
  for (const auto& c : cnf.clauses) {
    if (c.empty()) return 0;
    if (c.size() == 1 && c.lits[0] > 0) level[static_cast<std::size_t>(c.lits[0])] = 0;
  }
  for (std::size_t k = 1;; ++k) {
    bool progress = false;
    std::vector<int> fresh;
    for (const auto& c : cnf.clauses) {
      int head = 0;
      bool ready = true;
      for (int l : c.lits) {
        if (l > 0) {
          head = l;
        } else if (level[static_cast<std::size_t>(-l)] >= k) {
          ready = false;
        }
      }
      if (!ready) continue;
      if (head == 0) return k;
      if (level[static_cast<std::size_t>(head)] == SIZE_MAX) fresh.push_back(head);
    }
    for (int a : fresh) {
      if (level[static_cast<std::size_t>(a)] == SIZE_MAX) {
        level[static_cast<std::size_t>(a)] = k;
        progress = true;
      }
    }
    if (!progress) return 0;
  }
}

}  // namespace

HyperReport hyper_depth_demo(const ClauseSet& set, std::span<const ClauseId> support,
                             std::size_t max_length) {
  auto atoms = AtomTable::build(set);
  auto cnf = to_prop(set, atoms);
  for (const auto& c : cnf.clauses) {
    if (std::count_if(c.lits.begin(), c.lits.end(), [](int l) { return l > 0; }) > 1) {
      throw Error("clause " + std::to_string(c.id) + " is not Horn");
    }
  }
  auto ids = normalize_ids({support.begin(), support.end()});
  std::vector<std::size_t> goals;
  for (ClauseId id : ids) {
    auto it = std::find_if(cnf.clauses.begin(), cnf.clauses.end(),
                           [&](const PropClause& c) { return c.id == id; });
    if (it == cnf.clauses.end()) throw Error("unknown clause id " + std::to_string(id) + " in support");
    if (!it->all_negative()) throw Error("support clause " + std::to_string(id) + " has a positive literal");
    goals.push_back(static_cast<std::size_t>(it - cnf.clauses.begin()));
  }

  HyperReport report;
  LinearSearch linear(cnf);
  if (auto proof = linear.run(goals, max_length)) {
    report.sos_refuted = true;
    report.sos_length = proof->resolutions();
    report.sos_depth = proof->resolutions();
    report.sos_proof = std::move(*proof);
    auto map = bfs_from_support(build_graph(set, GraphMode::propositional_hub), ids);
    std::uint32_t worst = 0;
    for (ClauseId id : report.sos_proof.input_ids()) worst = std::max(worst, map.distance(id).value());
    report.max_distance = Distance(worst);
  }
  report.hyper_levels = hyper_levels(cnf);
  report.hyper_refuted = report.hyper_levels > 0 || cnf.has_empty_clause();

  std::ostringstream text;
  text << "set-of-support: ";
  if (report.sos_refuted) {
    text << "refutation with " << report.sos_length << " resolutions, depth " << report.sos_depth
         << '\n';
  } else {
    text << "no refutation within " << max_length << " resolutions\n";
  }
  text << "hyper-resolution: ";
  if (report.hyper_refuted) {
    text << "refutation at level " << report.hyper_levels << '\n';
  } else {
    text << "no refutation\n";
  }
  if (report.max_distance.finite()) {
    text << "max relevance distance of a used input clause: " << report.max_distance.to_string()
         << " (distance counts clauses on the path, so the support itself is at 1)\n";
  }
  report.text = text.str();
  return report;
}

}  // namespace aprel
