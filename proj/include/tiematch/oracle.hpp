#pragma once

#include "tiematch/instance.hpp"
#include "tiematch/matching.hpp"

namespace tiematch {

inline constexpr int kDefaultOracleBound = 12;

// Maximum-cardinality stable matching by exhaustive branch and bound.
// Men are branched in id order, each over the free women of his list in
// preference order and then "unmatched"; the first maximum found in that
// order is returned. Throws InstanceTooLarge when num_men > bound.
Matching opt_oracle(const Instance& inst, int bound = kDefaultOracleBound);

}  // namespace tiematch
