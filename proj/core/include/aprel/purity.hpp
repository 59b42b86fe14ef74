#pragma once

#include "aprel/syntax.hpp"

namespace aprel {

/// Repeatedly removes clauses holding a literal that is complementary
/// unifiable with no literal of the remaining clauses. The result is the
/// largest subset without such a clause; ids are preserved.
ClauseSet purity_filter(const ClauseSet& set);

}  // namespace aprel
