#include "sortnet/tableau.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <numeric>

#include <omp.h>

#include "sortnet/errors.hpp"

namespace sortnet {

namespace {

constexpr std::int32_t kOutside = INT32_MIN;

// Mutable conversion state for one tableau.  Stored entries are "real value
// minus number of completed iterations", so the running maximum is always an
// original entry and refills are new minima; this keeps every iteration free
// of global renumbering.  cell_of is indexed by stored value (originals
// 1..N, refills 0, -1, ..., -(N-2)) shifted by N - 1.
struct ConvertState {
    int n = 0;
    std::int64_t N = 0;
    int home = 0;
    int hole = 0;
    std::vector<std::int32_t> grid;
    std::vector<std::int32_t> cell_of;
    std::int32_t* g = nullptr;
    std::int32_t* cm = nullptr;
    std::int32_t* out = nullptr;

    void init(const StaircaseTableau& t, std::int32_t* swaps_out) {
        n = t.n;
        N = swap_count(n);
        home = n + 1;
        grid = t.cells;
        cell_of.assign(static_cast<std::size_t>(2 * N > 0 ? 2 * N : 1), 0);
        g = grid.data();
        cm = cell_of.data() + (N - 1);
        out = swaps_out;
        for (int r = 1; r < n; ++r) {
            for (int c = 1; c + r <= n; ++c) {
                cm[g[static_cast<std::size_t>(r) * n + c]] = r * n + c;
            }
        }
    }

    // Locate the maximum (stored value N - j), emit its row as swap j.
    inline void begin(std::int64_t j) {
        hole = cm[N - j];
        out[j] = static_cast<std::int32_t>(hole / n);
    }

    // The maximum always sits on the outer diagonal r + c = n, so the hole
    // reaches (1, 1) in exactly n - 2 pulls; sentinels outside the shape
    // (INT32_MIN in row 0 and column 0) steer it without bounds checks.
    inline void pull() {
        const std::int32_t up = g[hole - n];
        const std::int32_t lf = g[hole - 1];
        const bool take_up = up > lf;
        const std::int32_t v = take_up ? up : lf;
        const int src = take_up ? hole - n : hole - 1;
        g[hole] = v;
        cm[v] = hole;
        hole = src;
    }

    inline void finish(std::int64_t j) { g[home] = static_cast<std::int32_t>(-j); }
};

// Convert L tableaux in lockstep: all slides have identical length, so the
// lanes' dependency chains interleave without per-step bookkeeping.
template <int L>
void convert_lanes(const StaircaseTableau* const* tabs, std::int32_t* const* outs) {
    ConvertState st[L];
    for (int l = 0; l < L; ++l) st[l].init(*tabs[l], outs[l]);
    const std::int64_t N = st[0].N;
    const int n = st[0].n;
    const int pulls = n >= 2 ? n - 2 : 0;
    for (std::int64_t j = 0; j < N; ++j) {
        for (int l = 0; l < L; ++l) st[l].begin(j);
        for (int s = 0; s < pulls; ++s) {
            for (int l = 0; l < L; ++l) st[l].pull();
        }
        for (int l = 0; l < L; ++l) st[l].finish(j);
    }
}

// Convert count tableaux (all the same n) into preallocated swap buffers.
void convert_many(const StaircaseTableau* tabs, SortingNetwork* nets, int count) {
    int i = 0;
    while (count - i >= 4) {
        const StaircaseTableau* t[4] = {&tabs[i], &tabs[i + 1], &tabs[i + 2], &tabs[i + 3]};
        std::int32_t* o[4] = {nets[i].swaps.data(), nets[i + 1].swaps.data(),
                              nets[i + 2].swaps.data(), nets[i + 3].swaps.data()};
        convert_lanes<4>(t, o);
        i += 4;
    }
    while (count - i >= 2) {
        const StaircaseTableau* t[2] = {&tabs[i], &tabs[i + 1]};
        std::int32_t* o[2] = {nets[i].swaps.data(), nets[i + 1].swaps.data()};
        convert_lanes<2>(t, o);
        i += 2;
    }
    if (i < count) {
        const StaircaseTableau* t[1] = {&tabs[i]};
        std::int32_t* o[1] = {nets[i].swaps.data()};
        convert_lanes<1>(t, o);
    }
}

} // namespace

bool is_standard_staircase(const StaircaseTableau& t) {
    if (t.n < 1) return false;
    const std::int64_t N = swap_count(t.n);
    if (static_cast<std::int64_t>(t.cells.size()) != static_cast<std::int64_t>(t.n) * t.n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(N) + 1, false);
    for (int r = 1; r < t.n; ++r) {
        for (int c = 1; c + r <= t.n; ++c) {
            const std::int32_t v = t.at(r, c);
            if (v < 1 || v > N || seen[v]) return false;
            seen[v] = true;
            if (c > 1 && t.at(r, c - 1) >= v) return false;
            if (r > 1 && t.at(r - 1, c) >= v) return false;
        }
    }
    return true;
}

StaircaseTableau sample_staircase_tableau(int n, RandomSource& rng) {
    if (n < 1) throw InvalidNetwork("n must be at least 1");
    StaircaseTableau t;
    t.n = n;
    t.cells.assign(static_cast<std::size_t>(n) * n, kOutside);
    const std::int64_t N = swap_count(n);
    if (N == 0) return t;

    // Remaining cells of the shrinking shape, plus each cell's slot in that
    // list for O(1) removal.  rowlen/collen give hook arm and leg sizes.
    std::vector<std::int32_t> cells(static_cast<std::size_t>(N));
    std::vector<std::int32_t> slot(static_cast<std::size_t>(n) * n, -1);
    std::int64_t filled = 0;
    for (int r = 1; r < n; ++r) {
        for (int c = 1; c + r <= n; ++c) {
            cells[filled] = static_cast<std::int32_t>(r * n + c);
            slot[static_cast<std::size_t>(r) * n + c] = static_cast<std::int32_t>(filled);
            ++filled;
        }
    }
    std::vector<std::int32_t> rowlen(n, 0), collen(n, 0);
    for (int r = 1; r < n; ++r) rowlen[r] = n - r;
    for (int c = 1; c < n; ++c) collen[c] = n - c;

    for (std::int64_t v = N; v >= 1; --v) {
        const std::int32_t start = cells[rng.next_below(static_cast<std::uint64_t>(v))];
        int r = start / n, c = start % n;
        for (;;) {
            const int arm = rowlen[r] - c;
            const int leg = collen[c] - r;
            const int hook = arm + leg;
            if (hook == 0) break;
            const auto u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(hook)));
            if (u < arm) {
                c += 1 + u;
            } else {
                r += 1 + (u - arm);
            }
        }
        const std::int32_t corner = static_cast<std::int32_t>(r * n + c);
        t.cells[corner] = static_cast<std::int32_t>(v);
        const std::int32_t s = slot[corner];
        cells[s] = cells[v - 1];
        slot[cells[s]] = s;
        --rowlen[r];
        --collen[c];
    }
    return t;
}

SortingNetwork tableau_to_network(const StaircaseTableau& t) {
    if (!is_standard_staircase(t)) throw InvalidNetwork("not a standard staircase tableau");
    SortingNetwork net;
    net.n = t.n;
    net.swaps.assign(static_cast<std::size_t>(swap_count(t.n)), 0);
    const StaircaseTableau* tp[1] = {&t};
    std::int32_t* op[1] = {net.swaps.data()};
    convert_lanes<1>(tp, op);
    return net;
}

std::vector<std::int32_t> tableau_to_network_prefix(const StaircaseTableau& t, std::int64_t prefix) {
    if (!is_standard_staircase(t)) throw InvalidNetwork("not a standard staircase tableau");
    const std::int64_t N = swap_count(t.n);
    if (prefix < 0 || prefix > N) throw InvalidNetwork("prefix out of range");
    std::vector<std::int32_t> out(static_cast<std::size_t>(prefix));
    if (prefix == 0) return out;
    ConvertState st;
    st.init(t, out.data());
    const int pulls = t.n >= 2 ? t.n - 2 : 0;
    for (std::int64_t j = 0; j < prefix; ++j) {
        st.begin(j);
        for (int s = 0; s < pulls; ++s) st.pull();
        st.finish(j);
    }
    return out;
}

SortingNetwork sample_network(int n, RandomSource& rng) {
    StaircaseTableau t = sample_staircase_tableau(n, rng);
    return tableau_to_network(t);
}

std::vector<SortingNetwork> sample_networks(int n, int count, std::uint64_t seed,
                                            std::uint64_t stream0, int jobs) {
    std::vector<SortingNetwork> nets(static_cast<std::size_t>(count));
    const std::int64_t N = swap_count(n);
    for (auto& net : nets) {
        net.n = n;
        net.swaps.assign(static_cast<std::size_t>(N), 0);
    }
    const int groups = (count + 3) / 4;
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int grp = 0; grp < groups; ++grp) {
        const int lo = 4 * grp;
        const int hi = std::min(lo + 4, count);
        StaircaseTableau tabs[4];
        for (int i = lo; i < hi; ++i) {
            RandomSource rng(seed, stream0 + static_cast<std::uint64_t>(i));
            tabs[i - lo] = sample_staircase_tableau(n, rng);
        }
        convert_many(tabs, nets.data() + lo, hi - lo);
    }
    return nets;
}

std::vector<SortingNetwork> sample_networks_serial(int n, int count, std::uint64_t seed,
                                                   std::uint64_t stream0) {
    std::vector<SortingNetwork> nets;
    nets.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        RandomSource rng(seed, stream0 + static_cast<std::uint64_t>(i));
        nets.push_back(sample_network(n, rng));
    }
    return nets;
}

std::vector<double> first_swap_pmf(int n) {
    if (n < 2) return {};
    const auto N = static_cast<double>(swap_count(n));
    // g(m) = prod_{j=1}^{m-1} (2j+1)/(2j), so P(K = i) = g(i) g(n-i) / N.
    std::vector<double> g(static_cast<std::size_t>(n), 0.0);
    g[1] = 1.0;
    for (int m = 2; m < n; ++m) {
        const double j = m - 1;
        g[m] = g[m - 1] * (2.0 * j + 1.0) / (2.0 * j);
    }
    std::vector<double> pmf(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) pmf[i - 1] = g[i] * g[n - i] / N;
    return pmf;
}

} // namespace sortnet
