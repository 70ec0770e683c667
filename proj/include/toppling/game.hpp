#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toppling/chipfire.hpp"
#include "toppling/graph.hpp"
#include "toppling/grid.hpp"

namespace toppling {

enum class Player { Max, Min };

inline Player other(Player p) { return p == Player::Max ? Player::Min : Player::Max; }
inline const char* player_name(Player p) { return p == Player::Max ? "max" : "min"; }

enum class StrategyKind { Row, Triangle, Square };

StrategyKind parse_strategy(const std::string& name);
const char* strategy_name(StrategyKind kind);

struct TurnTrace {
    std::int64_t turn;
    Player player;
    int target;           // 1-based column
    std::int64_t fired;   // firings resolved after this placement
    std::int64_t total_chips;
    std::int64_t in_chips;
    std::int64_t out_chips;
};

struct GameRecord {
    int n = 0;
    std::int64_t turns = 0;
    std::int64_t rounds = 0;  // ceil(turns / 2)
    std::string end_reason;
    std::vector<TurnTrace> trace;  // filled only when requested
};

// Two-player toppling game on K_n through the grid model.  Strategies for
// Min and Max alternate starting with `first`; the final turn is the
// placement that makes the configuration volatile.
GameRecord play_grid_game(int n, StrategyKind min_strategy, StrategyKind max_strategy,
                          Player first, bool keep_trace = false);

// Reference implementation: the same game driven through a raw ChipConfig
// on K_n plus sorting, with volatility decided by the chip-firing engine.
// Kept deliberately independent of GridView's incremental bookkeeping; must
// produce identical records.
GameRecord play_complete_via_config(int n, StrategyKind min_strategy,
                                    StrategyKind max_strategy, Player first,
                                    bool keep_trace = false);

// Incremental toppling game on an arbitrary graph: place chips one at a
// time, resolve firing, detect the volatile end state.  A graph with an
// isolated vertex ends the game before any chip is placed.
class OrdinaryGame {
public:
    explicit OrdinaryGame(const Graph& g);
    bool ended() const { return ended_; }
    std::int64_t turns() const { return turns_; }
    const std::vector<std::int64_t>& chips() const { return chips_; }
    // Places one chip on v and resolves firing; returns true if the game
    // just ended.  Must not be called after the game has ended.
    bool place(int v);

private:
    const Graph* g_;
    std::vector<std::int64_t> chips_;
    std::vector<std::int64_t> fired_epoch_;
    std::vector<std::int64_t> comp_unfired_;
    std::int64_t epoch_ = 0;
    std::int64_t turns_ = 0;
    bool ended_ = false;
};

// Exact game value by memoized minimax over (stable configuration, player
// to move).  Guarded by the stable-state-space size; complete graphs use
// sorted canonical keys.  Graphs with a degree-0 vertex have value 0.
std::int64_t minimax_toppling(const Graph& g, Player first,
                              std::uint64_t state_guard = 100000000ULL);

}  // namespace toppling
