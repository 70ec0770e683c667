#pragma once

#include <cstdint>
#include <string>

#include "toppling/graph.hpp"
#include "toppling/rng.hpp"

namespace toppling {

struct SuiteResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    bool passed() const { return failures == 0; }
};

// Random test graphs; sizes include small degenerate cases.
Graph random_graph(Rng& rng, int max_n);
Graph random_connected_graph(Rng& rng, int max_n);  // tree plus extra edges

// Two independently randomized firing policies agree with the FIFO engine
// on the volatility tag, the stable configuration, and per-vertex firing
// counts.
SuiteResult check_abelian(std::uint64_t seed, int cases = 1000, int max_n = 40);

// On connected graphs: >= 2|E|-|V|+1 chips forces Volatile, and every
// Volatile configuration carries >= |E| chips.
SuiteResult check_thresholds(std::uint64_t seed, int cases = 10000, int max_n = 30);

// Sorted-dominance test on K_n agrees with the engine.
SuiteResult check_oracle_complete(std::uint64_t seed, int cases = 10000, int max_n = 12);

// If c1 dominates c2 and c2 is volatile, c1 is volatile.
SuiteResult check_monotonicity(std::uint64_t seed, int cases = 2000, int max_n = 25);

// grid_fire preserves in-chips (and totals) on grids reachable through
// play.
SuiteResult check_grid_fire_inchips(std::uint64_t seed, int fires = 10000);

// Abelian property for the fractional engine.
SuiteResult check_frac_abelian(std::uint64_t seed, int cases = 500, int max_n = 25);

}  // namespace toppling
