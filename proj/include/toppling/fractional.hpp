#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toppling/chipfire.hpp"
#include "toppling/game.hpp"
#include "toppling/graph.hpp"

namespace toppling {

// Exact rational, reduced, positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);
    static Rational parse(const std::string& text);  // "a/b" or "a"
    std::string str() const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// Fractional chip configuration with parameter p = a/b in (0,1].  Amounts
// are stored exactly as integer multiples of 1/b ("units"): a placement
// adds b units, firing a vertex removes a*deg(v) units and sends a units to
// each neighbour.  Thresholds are therefore exact integer comparisons.
struct FracConfig {
    const Graph* graph = nullptr;
    std::int64_t p_num = 1, p_den = 1;
    std::vector<std::int64_t> units;

    FracConfig() = default;
    FracConfig(const Graph& g, Rational p);

    std::int64_t threshold(int v) const { return p_num * graph->deg[v]; }
    void place(int v) { units[v] += p_den; }
    std::int64_t total_units() const;
};

// Greedy firing with threshold p*deg(v); Volatile detected by the
// all-fired-per-component rule, degree-0 vertices always eligible.  The
// returned chips/fire_counts are in units of 1/b.
StabilizeOutcome frac_stabilize_or_detect(const FracConfig& c);

// Policy-driven variant of the fractional engine, mirroring
// stabilize_with_policy; used by the abelian fuzz.
StabilizeOutcome frac_stabilize_with_policy(
    const FracConfig& c,
    const std::function<std::size_t(const std::vector<int>& eligible)>& pick);

// Exact fractional game value (each turn places one whole chip).
std::int64_t frac_minimax(const Graph& g, Rational p, Player first,
                          std::uint64_t state_guard = 100000000ULL);

// Fractional game on K_n under p-scaled grid strategies: column i's
// critical quota scales from n-i chips to p(n-i).  Only the row and
// triangle strategies generalize here.
GameRecord frac_grid_play(int n, Rational p, StrategyKind min_strategy,
                          StrategyKind max_strategy, Player first,
                          bool keep_trace = false);

struct CoupleResult {
    std::int64_t len_frac_kn = 0;
    std::int64_t len_g = 0;
};

// Coupled replay: run the fractional K_n game under the given strategy
// pair, mirroring every placement onto the ordinary game on g.  A move is
// identified by its sorted-grid column, so the mirrored chip lands on the
// vertex holding that column in g's own sorted configuration.  Each game's
// volatility is detected independently; once the fractional game ends, the
// strategies keep playing the surviving game from its own state until it
// too ends.
CoupleResult coupled_replay(const Graph& g, Rational p, StrategyKind min_strategy,
                            StrategyKind max_strategy, Player first);

}  // namespace toppling
