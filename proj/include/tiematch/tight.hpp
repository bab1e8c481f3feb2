#pragma once

#include <vector>

#include "tiematch/accepted_graph.hpp"
#include "tiematch/instance.hpp"
#include "tiematch/schedule.hpp"

namespace tiematch {

// 13 men and 13 women on which the two-proposal algorithm returns 9 pairs
// while a perfect stable matching exists. Person a_i^j / b_i^j (column i,
// block j) has id: block 1 -> 0..2, block 2 -> 3..6, block 3 -> 7..9,
// block 4 -> 10..12, ordered by column.
Instance tight_instance();

// The proposal order and tie-breaks that produce the drawn accepted graph.
Schedule tight_schedule();

// Edge sets as drawn, sorted.
std::vector<Edge> tight_accepted_edges();
std::vector<Edge> tight_m_edges();
std::vector<Edge> tight_opt_edges();

// Smallest oracle bound that admits the instance.
inline constexpr int kTightOracleBound = 13;

}  // namespace tiematch
