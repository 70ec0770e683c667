#include "toppling/game.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toppling {

StrategyKind parse_strategy(const std::string& name) {
    if (name == "row") return StrategyKind::Row;
    if (name == "triangle") return StrategyKind::Triangle;
    if (name == "square") return StrategyKind::Square;
    throw std::invalid_argument("unknown strategy: " + name);
}

const char* strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Row: return "row";
        case StrategyKind::Triangle: return "triangle";
        case StrategyKind::Square: return "square";
    }
    return "?";
}

namespace {

int pick_move(const GridView& grid, StrategyKind kind, int* square_cache) {
    switch (kind) {
        case StrategyKind::Row: return row_move(grid);
        case StrategyKind::Triangle: return triangle_move(grid);
        case StrategyKind::Square: return square_move(grid, square_cache);
    }
    throw std::logic_error("bad strategy kind");
}

}  // namespace

GameRecord play_grid_game(int n, StrategyKind min_strategy, StrategyKind max_strategy,
                          Player first, bool keep_trace) {
    GameRecord rec;
    rec.n = n;
    if (n < 1) throw std::invalid_argument("play_grid_game: n must be positive");
    if (n == 1) {
        rec.end_reason = "isolated vertex";
        return rec;
    }
    GridView grid(n);
    int square_cache_min = 0, square_cache_max = 0;
    for (std::int64_t turn = 1;; ++turn) {
        const Player player = (turn % 2 == 1) ? first : other(first);
        const StrategyKind kind = (player == Player::Min) ? min_strategy : max_strategy;
        int* cache = (player == Player::Min) ? &square_cache_min : &square_cache_max;
        const int col = pick_move(grid, kind, cache);
        if (col < 1 || col > n) throw std::runtime_error("strategy returned an illegal target");
        const int placed = grid.place(col);
        std::int64_t fired = 0;
        const bool over = grid.game_over();
        if (!over) {
            while (grid.fire_ready()) {
                grid.fire();
                ++fired;
            }
        }
        if (keep_trace)
            rec.trace.push_back({turn, player, placed, fired, grid.total(), grid.in_chips(),
                                 grid.out_chips()});
        if (over) {
            rec.turns = turn;
            break;
        }
    }
    rec.rounds = (rec.turns + 1) / 2;
    rec.end_reason = "volatile";
    return rec;
}

GameRecord play_complete_via_config(int n, StrategyKind min_strategy,
                                    StrategyKind max_strategy, Player first,
                                    bool keep_trace) {
    GameRecord rec;
    rec.n = n;
    if (n < 1) throw std::invalid_argument("play_complete_via_config: n must be positive");
    if (n == 1) {
        rec.end_reason = "isolated vertex";
        return rec;
    }
    const Graph g = complete_graph(n);
    ChipConfig config(g);
    std::vector<int> order(n);
    int square_cache_min = 0, square_cache_max = 0;
    for (std::int64_t turn = 1;; ++turn) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return config.chips[a] > config.chips[b];
        });
        std::vector<std::int64_t> heights(n);
        for (int i = 0; i < n; ++i) heights[i] = config.chips[order[i]];
        GridView view(n, std::move(heights));

        const Player player = (turn % 2 == 1) ? first : other(first);
        const StrategyKind kind = (player == Player::Min) ? min_strategy : max_strategy;
        int* cache = (player == Player::Min) ? &square_cache_min : &square_cache_max;
        const int col = pick_move(view, kind, cache);
        // Leftmost column of equal height, as in GridView::place.
        int idx = col - 1;
        while (idx > 0 && config.chips[order[idx - 1]] == config.chips[order[idx]]) --idx;
        const int v = order[idx];

        ++config.chips[v];
        const StabilizeOutcome out = stabilize_or_detect(config);
        std::int64_t fired = out.firings;
        if (out.is_volatile()) {
            rec.turns = turn;
            if (keep_trace) {
                GridView after(n, [&] {
                    std::vector<std::int64_t> h = config.chips;
                    std::sort(h.begin(), h.end(), std::greater<>());
                    return h;
                }());
                rec.trace.push_back({turn, player, idx + 1, 0, after.total(), after.in_chips(),
                                     after.out_chips()});
            }
            break;
        }
        config.chips = out.chips;
        if (keep_trace) {
            GridView after(n, [&] {
                std::vector<std::int64_t> h = config.chips;
                std::sort(h.begin(), h.end(), std::greater<>());
                return h;
            }());
            rec.trace.push_back({turn, player, idx + 1, fired, after.total(), after.in_chips(),
                                 after.out_chips()});
        }
    }
    rec.rounds = (rec.turns + 1) / 2;
    rec.end_reason = "volatile";
    return rec;
}

OrdinaryGame::OrdinaryGame(const Graph& g)
    : g_(&g),
      chips_(g.n, 0),
      fired_epoch_(g.n, 0),
      comp_unfired_(g.components(), 0) {
    if (g.n == 0 || g.has_isolated_vertex()) ended_ = true;
}

bool OrdinaryGame::place(int v) {
    if (ended_) throw std::logic_error("OrdinaryGame: game already ended");
    if (v < 0 || v >= g_->n) throw std::invalid_argument("OrdinaryGame: vertex out of range");
    ++turns_;
    ++chips_[v];
    if (chips_[v] < g_->deg[v]) return false;

    const Graph& g = *g_;
    ++epoch_;
    for (int c = 0; c < g.components(); ++c) comp_unfired_[c] = g.comp_size[c];
    std::vector<int> queue{v};
    std::vector<bool> queued(g.n, false);
    queued[v] = true;
    std::size_t head = 0;
    while (head < queue.size()) {
        const int w = queue[head++];
        queued[w] = false;
        if (chips_[w] < g.deg[w]) continue;
        chips_[w] -= g.deg[w];
        if (fired_epoch_[w] != epoch_) {
            fired_epoch_[w] = epoch_;
            if (--comp_unfired_[g.comp_id[w]] == 0) {
                ended_ = true;
                return true;
            }
        }
        for (int u : g.adj[w]) {
            if (++chips_[u] >= g.deg[u] && !queued[u]) {
                queue.push_back(u);
                queued[u] = true;
            }
        }
        if (chips_[w] >= g.deg[w] && !queued[w]) {
            queue.push_back(w);
            queued[w] = true;
        }
    }
    return false;
}

namespace {

using StateKey = std::vector<std::int32_t>;

struct MinimaxContext {
    const Graph* g;
    bool canonical;  // sort keys (complete graphs)
    std::map<std::pair<StateKey, int>, std::int64_t> memo;
};

StateKey canon(const MinimaxContext& ctx, const std::vector<std::int64_t>& chips) {
    StateKey key(chips.begin(), chips.end());
    if (ctx.canonical) std::sort(key.begin(), key.end(), std::greater<>());
    return key;
}

std::int64_t solve(MinimaxContext& ctx, const StateKey& state, Player to_move) {
    const auto memo_key = std::make_pair(state, to_move == Player::Max ? 0 : 1);
    if (const auto it = ctx.memo.find(memo_key); it != ctx.memo.end()) return it->second;

    const Graph& g = *ctx.g;
    std::int64_t best = (to_move == Player::Max) ? std::numeric_limits<std::int64_t>::min()
                                                 : std::numeric_limits<std::int64_t>::max();
    for (int v = 0; v < g.n; ++v) {
        // With canonical (sorted) states, placements on equal entries are
        // equivalent moves.
        if (ctx.canonical && v > 0 && state[v] == state[v - 1]) continue;
        ChipConfig next(g);
        for (int u = 0; u < g.n; ++u) next.chips[u] = state[u];
        ++next.chips[v];
        std::int64_t value;
        const StabilizeOutcome out = stabilize_or_detect(next);
        if (out.is_volatile()) {
            value = 1;
        } else {
            value = 1 + solve(ctx, canon(ctx, out.chips), other(to_move));
        }
        best = (to_move == Player::Max) ? std::max(best, value) : std::min(best, value);
    }
    ctx.memo.emplace(memo_key, best);
    return best;
}

}  // namespace

std::int64_t minimax_toppling(const Graph& g, Player first, std::uint64_t state_guard) {
    if (g.n == 0) return 0;
    if (g.has_isolated_vertex()) return 0;
    std::uint64_t states = 1;
    for (int v = 0; v < g.n; ++v) {
        states *= static_cast<std::uint64_t>(g.deg[v]);
        if (states > state_guard)
            throw std::invalid_argument("minimax_toppling: state space exceeds guard");
    }
    MinimaxContext ctx{&g, g.is_complete(), {}};
    StateKey empty(g.n, 0);
    return solve(ctx, empty, first);
}

}  // namespace toppling
