#include "aprel/link_index.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "aprel/unify.hpp"

namespace aprel {

namespace {
constexpr std::uint32_t kNoAtom = std::numeric_limits<std::uint32_t>::max();
}

LinkIndex::LinkIndex(std::shared_ptr<const ClauseSet> set) : set_(std::move(set)) {
  const auto& s = *set_;
  offsets_.reserve(s.size() + 1);
  std::unordered_map<Term, std::uint32_t, TermHash> atom_ids;
  for (std::uint32_t pos = 0; pos < s.size(); ++pos) {
    offsets_.push_back(static_cast<OccId>(occurrences_.size()));
    const auto& clause = s[pos];
    for (std::uint32_t i = 0; i < clause.size(); ++i) {
      auto o = static_cast<OccId>(occurrences_.size());
      occurrences_.push_back({pos, i});
      const auto& l = clause[i];
      int side = l.positive ? 0 : 1;
      by_predicate_[l.predicate()][side].push_back(o);
      if (l.is_ground()) {
        auto [it, inserted] =
            atom_ids.emplace(l.atom, static_cast<std::uint32_t>(atom_occurrences_.size()));
        if (inserted) atom_occurrences_.emplace_back();
        atom_occurrences_[it->second][side].push_back(o);
        occ_atom_.push_back(it->second);
      } else {
        ground_ = false;
        nonground_by_predicate_[l.predicate()][side].push_back(o);
        occ_atom_.push_back(kNoAtom);
      }
    }
  }
  offsets_.push_back(static_cast<OccId>(occurrences_.size()));
  partners_.resize(occurrences_.size());
}

const Literal& LinkIndex::literal(OccId o) const {
  const auto& occ = occurrences_[o];
  return (*set_)[occ.clause_pos][occ.literal];
}

bool LinkIndex::linked(OccId a, OccId b) {
  auto key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
  if (auto it = pair_cache_.find(key); it != pair_cache_.end()) return it->second;
  ++unification_tests_;
  bool result = complementary_unifiable(literal(a), literal(b));
  pair_cache_.emplace(key, result);
  return result;
}

std::span<const OccId> LinkIndex::partners(OccId o) {
  auto& slot = partners_[o];
  if (slot) return *slot;

  const auto& l = literal(o);
  int other = l.positive ? 1 : 0;
  std::vector<OccId> out;
  if (occ_atom_[o] != kNoAtom) {
    const auto& same_atom = atom_occurrences_[occ_atom_[o]][other];
    out.assign(same_atom.begin(), same_atom.end());
    if (auto it = nonground_by_predicate_.find(l.predicate()); it != nonground_by_predicate_.end()) {
      for (OccId c : it->second[other]) {
        if (linked(o, c)) out.push_back(c);
      }
      std::sort(out.begin(), out.end());
    }
  } else if (auto it = by_predicate_.find(l.predicate()); it != by_predicate_.end()) {
    for (OccId c : it->second[other]) {
      if (linked(o, c)) out.push_back(c);
    }
  }
  slot = std::move(out);
  return *slot;
}

void LinkIndex::compute_all() {
  for (OccId o = 0; o < occurrences_.size(); ++o) partners(o);
}

}  // namespace aprel
