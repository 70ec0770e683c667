#include "toppling/propcheck.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "toppling/chipfire.hpp"
#include "toppling/fractional.hpp"
#include "toppling/grid.hpp"

namespace toppling {

Graph random_graph(Rng& rng, int max_n) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
    const double p = rng.uniform01() * std::min(1.0, 4.0 / std::max(1, n - 1));
    return sample_gnp(n, p, rng.next());
}

Graph random_connected_graph(Rng& rng, int max_n) {
    const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng.below(v)), v);
    const int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
    for (int i = 0; i < extra; ++i) {
        const int u = static_cast<int>(rng.below(n));
        const int v = static_cast<int>(rng.below(n));
        if (u != v) edges.emplace_back(u, v);
    }
    return from_edge_list(n, edges);
}

namespace {

ChipConfig random_config(Rng& rng, const Graph& g) {
    ChipConfig c(g);
    // Mix of sparse and near-threshold placements.
    const int mode = static_cast<int>(rng.below(3));
    for (int v = 0; v < g.n; ++v) {
        const std::int64_t lim =
            mode == 0 ? 2 : (mode == 1 ? g.deg[v] + 1 : 2 * std::max(1, g.deg[v]));
        c.chips[v] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(lim) + 1));
    }
    return c;
}

auto random_policy(Rng& rng) {
    return [&rng](const std::vector<int>& eligible) -> std::size_t {
        return static_cast<std::size_t>(rng.below(eligible.size()));
    };
}

}  // namespace

SuiteResult check_abelian(std::uint64_t seed, int cases, int max_n) {
    SuiteResult res{"abelian", 0, 0};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Graph g = random_graph(rng, max_n);
        const ChipConfig c = random_config(rng, g);
        const StabilizeOutcome fifo = stabilize_or_detect(c);
        const StabilizeOutcome r1 = stabilize_with_policy(c, random_policy(rng));
        const StabilizeOutcome r2 = stabilize_with_policy(c, random_policy(rng));
        ++res.cases;
        const bool same_tag = fifo.tag == r1.tag && fifo.tag == r2.tag;
        bool same_state = true;
        if (same_tag && !fifo.is_volatile()) {
            same_state = fifo.chips == r1.chips && fifo.chips == r2.chips &&
                         fifo.fire_counts == r1.fire_counts &&
                         fifo.fire_counts == r2.fire_counts;
        }
        if (!same_tag || !same_state) ++res.failures;
    }
    return res;
}

SuiteResult check_thresholds(std::uint64_t seed, int cases, int max_n) {
    SuiteResult res{"thresholds", 0, 0};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Graph g = random_connected_graph(rng, max_n);
        const ChipConfig c = random_config(rng, g);
        const std::int64_t total = c.total();
        const std::int64_t edges = g.edge_count();
        const bool vol = stabilize_or_detect(c).is_volatile();
        ++res.cases;
        if (total >= 2 * edges - g.n + 1 && !vol) ++res.failures;
        else if (vol && total < edges) ++res.failures;
    }
    return res;
}

SuiteResult check_oracle_complete(std::uint64_t seed, int cases, int max_n) {
    SuiteResult res{"oracle-complete", 0, 0};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
        const Graph g = complete_graph(n);
        ChipConfig c(g);
        for (int v = 0; v < n; ++v)
            c.chips[v] = static_cast<std::int64_t>(rng.below(2 * n + 1));
        ++res.cases;
        if (is_volatile_complete(c) != stabilize_or_detect(c).is_volatile()) ++res.failures;
    }
    return res;
}

SuiteResult check_monotonicity(std::uint64_t seed, int cases, int max_n) {
    SuiteResult res{"monotonicity", 0, 0};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Graph g = random_graph(rng, max_n);
        const ChipConfig c2 = random_config(rng, g);
        ChipConfig c1 = c2;
        for (int v = 0; v < g.n; ++v)
            c1.chips[v] += static_cast<std::int64_t>(rng.below(3));
        ++res.cases;
        if (!dominates(c1, c2)) {
            ++res.failures;
            continue;
        }
        if (stabilize_or_detect(c2).is_volatile() && !stabilize_or_detect(c1).is_volatile())
            ++res.failures;
    }
    return res;
}

SuiteResult check_grid_fire_inchips(std::uint64_t seed, int fires) {
    SuiteResult res{"grid-fire-in-chips", 0, 0};
    Rng rng(seed);
    while (res.cases < fires) {
        const int n = 3 + static_cast<int>(rng.below(38));
        GridView grid(n);
        // Random play until the triangle fills, firing whenever ready.
        while (!grid.game_over() && res.cases < fires) {
            grid.place(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
            if (grid.game_over()) break;
            while (grid.fire_ready()) {
                const std::int64_t in_before = grid.in_chips();
                const std::int64_t total_before = grid.total();
                grid.fire();
                ++res.cases;
                if (grid.in_chips() != in_before || grid.total() != total_before)
                    ++res.failures;
            }
        }
    }
    return res;
}

SuiteResult check_frac_abelian(std::uint64_t seed, int cases, int max_n) {
    SuiteResult res{"frac-abelian", 0, 0};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Graph g = random_graph(rng, max_n);
        const std::int64_t b = 1 + static_cast<std::int64_t>(rng.below(6));
        const std::int64_t a = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(b)));
        FracConfig c(g, Rational(a, b));
        for (int v = 0; v < g.n; ++v)
            c.units[v] = static_cast<std::int64_t>(
                rng.below(static_cast<std::uint64_t>(2 * a * std::max(1, g.deg[v])) + 2));
        const StabilizeOutcome fifo = frac_stabilize_or_detect(c);
        const StabilizeOutcome r1 = frac_stabilize_with_policy(c, random_policy(rng));
        const StabilizeOutcome r2 = frac_stabilize_with_policy(c, random_policy(rng));
        ++res.cases;
        const bool same_tag = fifo.tag == r1.tag && fifo.tag == r2.tag;
        bool same_state = true;
        if (same_tag && !fifo.is_volatile())
            same_state = fifo.chips == r1.chips && fifo.chips == r2.chips;
        if (!same_tag || !same_state) ++res.failures;
    }
    return res;
}

}  // namespace toppling
