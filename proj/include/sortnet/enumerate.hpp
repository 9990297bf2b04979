#pragma once

// Exhaustive enumeration of small instances, used as test oracles.

#include <vector>

#include "sortnet/network.hpp"
#include "sortnet/tableau.hpp"

namespace sortnet {

// All sorting networks on n labels in lexicographic order of their swap
// sequences.  Counts: 1, 1, 2, 16, 768 for n = 1..5.  Guarded to n <= 6.
std::vector<SortingNetwork> enumerate_networks(int n);

// All standard fillings of the staircase shape (n-1, n-2, ..., 1).
// Counts match enumerate_networks(n).  Guarded to n <= 6.
std::vector<StaircaseTableau> enumerate_staircase_tableaux(int n);

} // namespace sortnet
