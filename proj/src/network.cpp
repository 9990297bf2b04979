#include "sortnet/network.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "sortnet/errors.hpp"

namespace sortnet {

namespace {

std::string check_network(const SortingNetwork& net) {
    if (net.n < 1) return "n must be at least 1";
    const std::int64_t N = swap_count(net.n);
    if (static_cast<std::int64_t>(net.swaps.size()) != N) {
        return "expected " + std::to_string(N) + " swaps, got " + std::to_string(net.swaps.size());
    }
    for (std::int32_t k : net.swaps) {
        if (k < 1 || k >= net.n) return "swap position " + std::to_string(k) + " out of range";
    }
    std::vector<std::int32_t> perm(net.n);
    std::iota(perm.begin(), perm.end(), 1);
    for (std::int32_t k : net.swaps) std::swap(perm[k - 1], perm[k]);
    for (int i = 0; i < net.n; ++i) {
        if (perm[i] != net.n - i) return "composition does not reverse 1..n";
    }
    return {};
}

} // namespace

bool is_valid_network(const SortingNetwork& net) { return check_network(net).empty(); }

void validate_network(const SortingNetwork& net) {
    std::string reason = check_network(net);
    if (!reason.empty()) throw InvalidNetwork(reason);
}

int position(const SortingNetwork& net, int x, std::int64_t steps) {
    int pos = x;
    for (std::int64_t t = 0; t < steps; ++t) {
        const std::int32_t k = net.swaps[t];
        if (pos == k) {
            pos = k + 1;
        } else if (pos == k + 1) {
            pos = k;
        }
    }
    return pos;
}

Trajectory global_trajectory(const SortingNetwork& net, int x) {
    Trajectory traj;
    traj.n = net.n;
    traj.particle = x;
    traj.positions.resize(net.swaps.size() + 1);
    std::int32_t pos = x;
    traj.positions[0] = pos;
    for (std::size_t t = 0; t < net.swaps.size(); ++t) {
        const std::int32_t k = net.swaps[t];
        if (pos == k) {
            pos = k + 1;
        } else if (pos == k + 1) {
            pos = k;
        }
        traj.positions[t + 1] = pos;
    }
    return traj;
}

SortingNetwork restrict_network(const SortingNetwork& net, const std::vector<int>& subset) {
    const int m = static_cast<int>(subset.size());
    for (int i = 0; i < m; ++i) {
        if (subset[i] < 1 || subset[i] > net.n) throw InvalidNetwork("subset label out of range");
        if (i > 0 && subset[i] <= subset[i - 1]) throw InvalidNetwork("subset must be strictly increasing");
    }
    // rank[p] is 1 + the number of selected positions below p, or 0 when the
    // particle at p is not selected.  Swapping two selected neighbours keeps
    // the rank-to-position assignment unchanged, so only single-selected
    // swaps move ranks around.
    std::vector<std::int32_t> rank(net.n + 2, 0);
    for (int i = 0; i < m; ++i) rank[subset[i]] = i + 1;
    SortingNetwork out;
    out.n = m;
    out.swaps.reserve(swap_count(m));
    for (std::int32_t k : net.swaps) {
        const std::int32_t a = rank[k], b = rank[k + 1];
        if (a != 0 && b != 0) {
            out.swaps.push_back(std::min(a, b));
        } else if (a != b) {
            std::swap(rank[k], rank[k + 1]);
        }
    }
    return out;
}

int NetworkEvolution::position_at(int particle, std::int64_t step) const {
    const std::int64_t lo = offsets[particle - 1], hi = offsets[particle];
    // Last event with event.step <= step, if any.
    std::int64_t a = lo, b = hi;
    while (a < b) {
        const std::int64_t mid = (a + b) / 2;
        if (events[mid].step <= step) {
            a = mid + 1;
        } else {
            b = mid;
        }
    }
    return a == lo ? particle : events[a - 1].pos;
}

NetworkEvolution build_evolution(const SortingNetwork& net) {
    NetworkEvolution ev;
    ev.n = net.n;
    ev.steps = static_cast<std::int64_t>(net.swaps.size());
    ev.offsets.assign(net.n + 1, 0);

    // Count each particle's swaps, then fill CSR-style.
    std::vector<std::int32_t> at(net.n + 1);          // position -> particle
    std::iota(at.begin(), at.end(), 0);
    for (std::int32_t k : net.swaps) {
        ++ev.offsets[at[k]];
        ++ev.offsets[at[k + 1]];
        std::swap(at[k], at[k + 1]);
    }
    for (int i = 1; i <= net.n; ++i) ev.offsets[i] += ev.offsets[i - 1];
    ev.events.resize(ev.offsets[net.n]);

    std::vector<std::int64_t> cursor(ev.offsets.begin(), ev.offsets.end() - 1);
    std::iota(at.begin(), at.end(), 0);
    for (std::int64_t t = 0; t < ev.steps; ++t) {
        const std::int32_t k = net.swaps[t];
        const std::int32_t a = at[k], b = at[k + 1];
        ev.events[cursor[a - 1]++] = {static_cast<std::int32_t>(t + 1), k + 1};
        ev.events[cursor[b - 1]++] = {static_cast<std::int32_t>(t + 1), k};
        std::swap(at[k], at[k + 1]);
    }
    return ev;
}

std::string to_text(const SortingNetwork& net) {
    std::ostringstream os;
    os << net.n;
    for (std::int32_t k : net.swaps) os << ' ' << k;
    return os.str();
}

SortingNetwork network_from_text(const std::string& line) {
    std::istringstream is(line);
    SortingNetwork net;
    if (!(is >> net.n)) throw IoError("network text: missing n");
    std::int64_t k;
    while (is >> k) net.swaps.push_back(static_cast<std::int32_t>(k));
    if (!is.eof()) throw IoError("network text: trailing garbage");
    validate_network(net);
    return net;
}

std::string to_json(const SortingNetwork& net) {
    nlohmann::json j;
    j["n"] = net.n;
    j["swaps"] = net.swaps;
    return j.dump();
}

SortingNetwork network_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("network json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("swaps")) {
        throw IoError("network json: expected object with \"n\" and \"swaps\"");
    }
    SortingNetwork net;
    net.n = j["n"].get<int>();
    net.swaps = j["swaps"].get<std::vector<std::int32_t>>();
    validate_network(net);
    return net;
}

SortingNetwork bubble_network(int n) {
    SortingNetwork net;
    net.n = n;
    net.swaps.reserve(swap_count(n));
    for (int pass = n - 1; pass >= 1; --pass) {
        for (int k = 1; k <= pass; ++k) net.swaps.push_back(k);
    }
    return net;
}

} // namespace sortnet
