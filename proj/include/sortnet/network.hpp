#pragma once

// Sorting networks and particle trajectories.
//
// A sorting network on n labels is a sequence of N = n(n-1)/2 adjacent swap
// positions k_1..k_N (1-based, k in [1, n-1]) whose composition maps the
// identity to the full reversal.  Swap t exchanges whatever particles sit at
// positions k_t and k_t + 1, so every unordered pair of particles swaps
// exactly once.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sortnet {

struct SortingNetwork {
    int n = 0;
    std::vector<std::int32_t> swaps;
};

constexpr std::int64_t swap_count(int n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

bool is_valid_network(const SortingNetwork& net);

// Throws InvalidNetwork with a reason when the check fails.
void validate_network(const SortingNetwork& net);

// Position of particle x (1-based) after the first `steps` swaps.
// position(net, x, 0) == x and position(net, x, N) == n + 1 - x.
int position(const SortingNetwork& net, int x, std::int64_t steps);

// Piecewise-constant particle path, sampled at every step boundary and
// rescaled to time [0, 1] and space [-1, 1].  Positions are kept as exact
// integers; value() applies the rescaling 2 p / n - 1.
struct Trajectory {
    int n = 0;
    int particle = 0;
    std::vector<std::int32_t> positions; // length N + 1

    std::size_t steps() const { return positions.empty() ? 0 : positions.size() - 1; }
    double time(std::size_t step) const {
        return steps() == 0 ? 0.0 : static_cast<double>(step) / static_cast<double>(steps());
    }
    double value(std::size_t step) const {
        return 2.0 * static_cast<double>(positions[step]) / static_cast<double>(n) - 1.0;
    }
};

Trajectory global_trajectory(const SortingNetwork& net, int x);

// Network induced on a subset of particles (1-based labels, strictly
// increasing).  Swaps between two selected particles are emitted at the rank
// the lower one occupies among the selected positions; everything else is
// dropped.  The result is a sorting network on subset.size() labels.
SortingNetwork restrict_network(const SortingNetwork& net, const std::vector<int>& subset);

// Per-particle swap events of one full simulation pass, shared by the
// statistics kernels so a network is only simulated once.  Events of particle
// x live in events[offsets[x-1] .. offsets[x]); each holds the step at which
// the particle moved and its position from that step on.
struct NetworkEvolution {
    int n = 0;
    std::int64_t steps = 0;
    struct Event {
        std::int32_t step;
        std::int32_t pos;
    };
    std::vector<std::int64_t> offsets; // length n + 1
    std::vector<Event> events;         // length 2 N

    int position_at(int particle, std::int64_t step) const;
};

NetworkEvolution build_evolution(const SortingNetwork& net);

// One-line text format "n k1 k2 ... kN".
std::string to_text(const SortingNetwork& net);
SortingNetwork network_from_text(const std::string& line);

// JSON object {"n": n, "swaps": [k1, ...]}.
std::string to_json(const SortingNetwork& net);
SortingNetwork network_from_json(const std::string& text);

// (1, 2, ..., n-1, 1, 2, ..., n-2, ..., 1, 2, 1): successive bubble passes.
SortingNetwork bubble_network(int n);

} // namespace sortnet
