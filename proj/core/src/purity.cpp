#include "aprel/purity.hpp"

#include <memory>

#include "aprel/link_index.hpp"

namespace aprel {

ClauseSet purity_filter(const ClauseSet& set) {
  LinkIndex index(std::make_shared<const ClauseSet>(set));
  index.compute_all();

  // Live partner count per occurrence; a clause dies once any of its
  // occurrences reaches zero.
  std::vector<std::size_t> live(index.occurrence_count());
  std::vector<bool> removed(set.size(), false);
  std::vector<std::size_t> doomed;
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    OccId first = index.first_occurrence(pos);
    for (OccId o = first; o < first + index.clause_size(pos); ++o) {
      live[o] = index.partners(o).size();
      if (live[o] == 0 && !removed[pos]) {
        removed[pos] = true;
        doomed.push_back(pos);
      }
    }
  }
  while (!doomed.empty()) {
    auto pos = doomed.back();
    doomed.pop_back();
    OccId first = index.first_occurrence(pos);
    for (OccId o = first; o < first + index.clause_size(pos); ++o) {
      for (OccId q : index.partners(o)) {
        auto other = index.occurrence(q).clause_pos;
        if (--live[q] == 0 && !removed[other]) {
          removed[other] = true;
          doomed.push_back(other);
        }
      }
    }
  }
  return set.filter([&](const Clause& c) { return !removed[*set.position(c.id())]; });
}

}  // namespace aprel
