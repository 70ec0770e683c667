#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "toppling/graph.hpp"
#include "toppling/rng.hpp"

namespace toppling {

// Chip configuration c : V -> N u {0} on a fixed graph.
struct ChipConfig {
    const Graph* graph = nullptr;
    std::vector<std::int64_t> chips;

    ChipConfig() = default;
    explicit ChipConfig(const Graph& g) : graph(&g), chips(g.n, 0) {}
    ChipConfig(const Graph& g, std::vector<std::int64_t> c);

    std::int64_t total() const;
};

enum class Volatility { Stable, Volatile };

struct StabilizeOutcome {
    Volatility tag = Volatility::Stable;
    // On Stable: the unique stabilization and per-vertex firing counts.
    // On Volatile: fired flags at detection time (all true on the component
    // that triggered detection) and the number of firings performed.
    std::vector<std::int64_t> chips;
    std::vector<std::int64_t> fire_counts;
    std::vector<bool> fired;
    std::int64_t firings = 0;

    bool is_volatile() const { return tag == Volatility::Volatile; }
};

// Fire vertex v: removes deg(v) chips from v, adds one to each neighbour.
// Throws if chips(v) < deg(v).
void fire(ChipConfig& c, int v);

// Decide volatility / compute the stabilization.  Greedy FIFO firing per
// component; a component is declared Volatile as soon as every one of its
// vertices has fired at least once (sound and complete for connected
// components; degree-0 vertices make the configuration Volatile outright).
StabilizeOutcome stabilize_or_detect(const ChipConfig& c);

// Same decision procedure but the next vertex to fire is chosen by `pick`
// from the current eligible set.  Used by the abelian-property fuzz: any
// policy must agree with the FIFO engine on tag, stable configuration, and
// per-vertex firing counts.
StabilizeOutcome stabilize_with_policy(
    const ChipConfig& c,
    const std::function<std::size_t(const std::vector<int>& eligible)>& pick);

// Sorted-dominance volatility test for complete graphs: true iff the chip
// counts sorted nonincreasingly satisfy s_i >= n-i.  Requires chips <= n-1;
// configurations with a larger pile are settled through stabilize_or_detect
// first.  Throws on non-complete graphs.
bool is_volatile_complete(const ChipConfig& c);

// c1(v) >= c2(v) for all v.  Throws on mismatched graphs.
bool dominates(const ChipConfig& c1, const ChipConfig& c2);

// Snapshot format: one line "v chips(v)" per vertex with nonzero chips.
void write_snapshot(std::ostream& out, const ChipConfig& c);
ChipConfig read_snapshot(std::istream& in, const Graph& g);

}  // namespace toppling
