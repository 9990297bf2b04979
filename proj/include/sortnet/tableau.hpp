#pragma once

// Exactly uniform sampling of sorting networks.
//
// Uniform standard fillings of the staircase shape (n-1, n-2, ..., 1) are
// drawn by the corner hook walk (values N down to 1; every start cell is
// uniform among the remaining cells and every jump is uniform in the current
// hook, so all cell probabilities are exact integer ratios).  Tableaux map
// bijectively onto sorting networks through iterated sliding: delete the
// maximum, pull the larger of the upper/left neighbours into the hole until
// it reaches (1, 1), then refill (1, 1) with a new minimum.  The row of the
// deleted maximum at iteration t is emitted as swap k_t.  Emitting rows in
// iteration order is one of the four symmetric orientations of the
// correspondence (row vs n-row, forward vs reversed); all four produce valid
// networks and identical uniform output laws, and the enumeration tests pin
// this build to the row/forward one.

#include <cstdint>
#include <vector>

#include "sortnet/network.hpp"
#include "sortnet/rng.hpp"

namespace sortnet {

// Standard staircase tableau, rows r = 1..n-1 of length n-r.  Cells are kept
// in a flat array of stride n indexed (r, c) -> r * n + c for 1-based r, c;
// out-of-shape slots hold INT32_MIN so kernels can read neighbours without
// bounds checks.
struct StaircaseTableau {
    int n = 0;
    std::vector<std::int32_t> cells;

    std::int32_t at(int r, int c) const { return cells[static_cast<std::size_t>(r) * n + c]; }
    bool in_shape(int r, int c) const { return r >= 1 && c >= 1 && r + c <= n; }
};

bool is_standard_staircase(const StaircaseTableau& t);

// Exactly uniform standard staircase tableau.
StaircaseTableau sample_staircase_tableau(int n, RandomSource& rng);

// The bijection described above; output always passes validate_network.
SortingNetwork tableau_to_network(const StaircaseTableau& t);

// First `prefix` swaps of tableau_to_network(t) without running the
// remaining iterations.
std::vector<std::int32_t> tableau_to_network_prefix(const StaircaseTableau& t, std::int64_t prefix);

// Uniform random sorting network.
SortingNetwork sample_network(int n, RandomSource& rng);

// Batch sampler.  Replicate i draws from RandomSource(seed, stream0 + i), so
// the output is independent of jobs; conversions run several tableaux in
// interleaved lanes to hide the slide loop's dependency latency.
std::vector<SortingNetwork> sample_networks(int n, int count, std::uint64_t seed,
                                            std::uint64_t stream0 = 0, int jobs = 0);

// Serial single-lane reference for the batch sampler; identical output.
std::vector<SortingNetwork> sample_networks_serial(int n, int count, std::uint64_t seed,
                                                   std::uint64_t stream0 = 0);

// Distribution of the first swap position of a uniform network:
// P(K = i) = g(i) g(n-i) / N with g(m) = prod_{j<m} (2j+1)/(2j).
// Sums to 1 and every entry is at most 3/n.
std::vector<double> first_swap_pmf(int n);

} // namespace sortnet
