#include "toppling/fractional.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toppling {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : d;
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(n, 1);
        }
        const std::int64_t n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(text);
        const std::int64_t d = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1) throw std::invalid_argument(text);
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

FracConfig::FracConfig(const Graph& g, Rational p) : graph(&g) {
    if (p.num <= 0 || p.num > p.den)
        throw std::invalid_argument("FracConfig: p must lie in (0,1]");
    p_num = p.num;
    p_den = p.den;
    units.assign(g.n, 0);
}

std::int64_t FracConfig::total_units() const {
    std::int64_t s = 0;
    for (std::int64_t u : units) s += u;
    return s;
}

StabilizeOutcome frac_stabilize_or_detect(const FracConfig& c) {
    const Graph& g = *c.graph;
    StabilizeOutcome out;
    out.fired.assign(g.n, false);
    if (g.has_isolated_vertex()) {
        out.tag = Volatility::Volatile;
        for (int v = 0; v < g.n; ++v)
            if (g.deg[v] == 0) out.fired[v] = true;
        return out;
    }
    out.chips = c.units;
    out.fire_counts.assign(g.n, 0);
    std::vector<std::int64_t> comp_unfired(g.comp_size.begin(), g.comp_size.end());

    std::vector<int> queue;
    std::vector<bool> queued(g.n, false);
    for (int v = 0; v < g.n; ++v) {
        if (out.chips[v] >= c.threshold(v)) {
            queue.push_back(v);
            queued[v] = true;
        }
    }
    std::size_t head = 0;
    while (head < queue.size()) {
        const int v = queue[head++];
        queued[v] = false;
        if (out.chips[v] < c.threshold(v)) continue;
        out.chips[v] -= c.threshold(v);
        ++out.firings;
        ++out.fire_counts[v];
        if (!out.fired[v]) {
            out.fired[v] = true;
            if (--comp_unfired[g.comp_id[v]] == 0) {
                out.tag = Volatility::Volatile;
                out.chips.clear();
                out.fire_counts.clear();
                return out;
            }
        }
        for (int u : g.adj[v]) {
            out.chips[u] += c.p_num;
            if (out.chips[u] >= c.threshold(u) && !queued[u]) {
                queue.push_back(u);
                queued[u] = true;
            }
        }
        if (out.chips[v] >= c.threshold(v) && !queued[v]) {
            queue.push_back(v);
            queued[v] = true;
        }
    }
    out.tag = Volatility::Stable;
    return out;
}

StabilizeOutcome frac_stabilize_with_policy(
    const FracConfig& c,
    const std::function<std::size_t(const std::vector<int>&)>& pick) {
    const Graph& g = *c.graph;
    StabilizeOutcome out;
    out.fired.assign(g.n, false);
    if (g.has_isolated_vertex()) {
        out.tag = Volatility::Volatile;
        for (int v = 0; v < g.n; ++v)
            if (g.deg[v] == 0) out.fired[v] = true;
        return out;
    }
    out.chips = c.units;
    out.fire_counts.assign(g.n, 0);
    std::vector<std::int64_t> comp_unfired(g.comp_size.begin(), g.comp_size.end());

    std::vector<int> eligible;
    for (;;) {
        eligible.clear();
        for (int v = 0; v < g.n; ++v)
            if (out.chips[v] >= c.threshold(v)) eligible.push_back(v);
        if (eligible.empty()) break;
        const std::size_t i = pick(eligible);
        if (i >= eligible.size()) throw std::logic_error("policy picked out of range");
        const int v = eligible[i];
        out.chips[v] -= c.threshold(v);
        for (int u : g.adj[v]) out.chips[u] += c.p_num;
        ++out.firings;
        ++out.fire_counts[v];
        if (!out.fired[v]) {
            out.fired[v] = true;
            if (--comp_unfired[g.comp_id[v]] == 0) {
                out.tag = Volatility::Volatile;
                out.chips.clear();
                out.fire_counts.clear();
                return out;
            }
        }
    }
    out.tag = Volatility::Stable;
    return out;
}

namespace {

using StateKey = std::vector<std::int64_t>;

struct FracMinimaxContext {
    const Graph* g;
    std::int64_t a, b;
    bool canonical;
    std::map<std::pair<StateKey, int>, std::int64_t> memo;
};

std::int64_t frac_solve(FracMinimaxContext& ctx, const StateKey& state, Player to_move) {
    const auto memo_key = std::make_pair(state, to_move == Player::Max ? 0 : 1);
    if (const auto it = ctx.memo.find(memo_key); it != ctx.memo.end()) return it->second;

    const Graph& g = *ctx.g;
    std::int64_t best = (to_move == Player::Max) ? std::numeric_limits<std::int64_t>::min()
                                                 : std::numeric_limits<std::int64_t>::max();
    for (int v = 0; v < g.n; ++v) {
        if (ctx.canonical && v > 0 && state[v] == state[v - 1]) continue;
        FracConfig next(g, Rational(ctx.a, ctx.b));
        next.units = state;
        next.place(v);
        std::int64_t value;
        const StabilizeOutcome out = frac_stabilize_or_detect(next);
        if (out.is_volatile()) {
            value = 1;
        } else {
            StateKey key = out.chips;
            if (ctx.canonical) std::sort(key.begin(), key.end(), std::greater<>());
            value = 1 + frac_solve(ctx, key, other(to_move));
        }
        best = (to_move == Player::Max) ? std::max(best, value) : std::min(best, value);
    }
    ctx.memo.emplace(memo_key, best);
    return best;
}

}  // namespace

std::int64_t frac_minimax(const Graph& g, Rational p, Player first,
                          std::uint64_t state_guard) {
    if (p.num <= 0 || p.num > p.den) throw std::invalid_argument("frac_minimax: p outside (0,1]");
    if (g.n == 0) return 0;
    if (g.has_isolated_vertex()) return 0;
    std::uint64_t states = 1;
    for (int v = 0; v < g.n; ++v) {
        states *= static_cast<std::uint64_t>(p.num) * static_cast<std::uint64_t>(g.deg[v]);
        if (states > state_guard)
            throw std::invalid_argument("frac_minimax: state space exceeds guard");
    }
    FracMinimaxContext ctx{&g, p.num, p.den, g.is_complete(), {}};
    StateKey empty(g.n, 0);
    return frac_solve(ctx, empty, first);
}

namespace {

// Fractional K_n game state: vertex amounts in units, kept sorted
// nonincreasingly together with the vertex permutation.
class FracGridGame {
public:
    FracGridGame(int n, Rational p)
        : n_(n), a_(p.num), b_(p.den), graph_(complete_graph(n)),
          config_(graph_, p), order_(n) {
        std::iota(order_.begin(), order_.end(), 0);
        ended_ = (n == 1);  // K_1 is an isolated vertex
    }

    bool ended() const { return ended_; }
    std::int64_t turns() const { return turns_; }
    std::int64_t quota(int pos) const { return a_ * (n_ - 1 - pos); }  // 0-based
    std::int64_t unit_at(int pos) const { return config_.units[order_[pos]]; }

    std::int64_t in_units() const {
        std::int64_t s = 0;
        for (int i = 0; i < n_; ++i) s += std::min(unit_at(i), quota(i));
        return s;
    }

    int choose(StrategyKind kind) const {
        if (kind == StrategyKind::Row) {
            // Leftmost column of minimal amount.
            const std::int64_t lowest = unit_at(n_ - 1);
            int pos = n_ - 1;
            while (pos > 0 && unit_at(pos - 1) == lowest) --pos;
            return pos;
        }
        if (kind == StrategyKind::Triangle) {
            // Rightmost column minimizing units + a*i among columns still
            // below their scaled critical quota.
            int best = -1;
            std::int64_t best_level = std::numeric_limits<std::int64_t>::max();
            for (int i = 0; i < n_; ++i) {
                if (unit_at(i) >= quota(i)) continue;
                const std::int64_t level = unit_at(i) + a_ * i;
                if (level <= best_level) {
                    best_level = level;
                    best = i;
                }
            }
            if (best >= 0) return best;
            return choose(StrategyKind::Row);  // all quotas met (frozen play)
        }
        throw std::invalid_argument("fractional play supports only row and triangle strategies");
    }

    // Places one chip at the given sorted position (leftmost equal column);
    // returns the vertex it landed on.  Resolves firing and end detection
    // unless the game has already ended (frozen mode keeps amounts moving
    // so that strategies can continue to drive a coupled game).
    int step(int pos, std::int64_t* fired = nullptr) {
        while (pos > 0 && unit_at(pos - 1) == unit_at(pos)) --pos;
        last_column_ = pos + 1;
        const int v = order_[pos];
        config_.place(v);
        ++turns_;
        if (fired) *fired = 0;
        if (!ended_) {
            // Scaled sorted-dominance shortcut, sound direction only: if
            // every sorted amount meets its quota the engine must agree.
            resort();
            bool dominant = true;
            for (int i = 0; i < n_; ++i)
                if (unit_at(i) < quota(i)) { dominant = false; break; }
            const StabilizeOutcome out = frac_stabilize_or_detect(config_);
            if (dominant) assert(out.is_volatile());
            if (out.is_volatile()) {
                ended_ = true;
            } else {
                config_.units = out.chips;
                if (fired) *fired = out.firings;
            }
        }
        resort();
        return v;
    }

    std::int64_t total_units() const { return config_.total_units(); }
    int last_column() const { return last_column_; }

private:
    void resort() {
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
            return config_.units[x] > config_.units[y];
        });
    }

    int n_;
    std::int64_t a_, b_;
    Graph graph_;
    FracConfig config_;
    std::vector<int> order_;
    std::int64_t turns_ = 0;
    int last_column_ = 0;
    bool ended_ = false;
};

}  // namespace

GameRecord frac_grid_play(int n, Rational p, StrategyKind min_strategy,
                          StrategyKind max_strategy, Player first, bool keep_trace) {
    GameRecord rec;
    rec.n = n;
    if (n < 1) throw std::invalid_argument("frac_grid_play: n must be positive");
    if (n == 1) {
        rec.end_reason = "isolated vertex";
        return rec;
    }
    FracGridGame game(n, p);
    for (std::int64_t turn = 1;; ++turn) {
        const Player player = (turn % 2 == 1) ? first : other(first);
        const StrategyKind kind = (player == Player::Min) ? min_strategy : max_strategy;
        const int pos = game.choose(kind);
        std::int64_t fired = 0;
        game.step(pos, &fired);
        if (keep_trace) {
            const std::int64_t total = game.total_units();
            const std::int64_t in = game.in_units();
            rec.trace.push_back({turn, player, game.last_column(), fired, total, in, total - in});
        }
        if (game.ended()) {
            rec.turns = turn;
            break;
        }
    }
    rec.rounds = (rec.turns + 1) / 2;
    rec.end_reason = "volatile";
    return rec;
}

namespace {

// Strategy move computed from an ordinary configuration's own sorted state,
// with column quotas scaled by p as in the fractional grid.  Used once the
// fractional driver game has ended but the mirrored game has not: the
// strategies then keep playing, reading the surviving game.
int choose_on_config(const Graph& g, const std::vector<std::int64_t>& chips,
                     Rational p, StrategyKind kind) {
    const int n = static_cast<int>(chips.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return chips[x] > chips[y]; });
    if (kind == StrategyKind::Triangle || kind == StrategyKind::Square) {
        int best = -1;
        std::int64_t best_level = std::numeric_limits<std::int64_t>::max();
        for (int i = 0; i < n; ++i) {
            const std::int64_t scaled = chips[order[i]] * p.den;
            if (scaled >= p.num * (n - 1 - i)) continue;
            const std::int64_t level = scaled + p.num * i;
            if (level <= best_level) {
                best_level = level;
                best = i;
            }
        }
        if (best >= 0) return order[best];
        // Every quota is met but the configuration still is not volatile
        // (the quotas average out the degree spread).  Min's endgame is to
        // seed a cascade: feed the vertex closest to its firing threshold.
        int target = 0;
        std::int64_t deficiency = std::numeric_limits<std::int64_t>::max();
        for (int v = 0; v < n; ++v) {
            const std::int64_t d = g.deg[v] - chips[v];
            if (d < deficiency) {
                deficiency = d;
                target = v;
            }
        }
        return target;
    }
    // Row strategy: level the lowest pile.
    int best = order[n - 1];
    for (int i = n - 1; i > 0 && chips[order[i - 1]] == chips[best]; --i)
        best = order[i - 1];
    return best;
}

}  // namespace

CoupleResult coupled_replay(const Graph& g, Rational p, StrategyKind min_strategy,
                            StrategyKind max_strategy, Player first) {
    if (g.n < 2) throw std::invalid_argument("coupled_replay: graph too small");
    FracGridGame frac(g.n, p);
    OrdinaryGame real(g);
    CoupleResult result;
    const std::int64_t cap =
        20 * static_cast<std::int64_t>(g.n) * g.n + 1000000;
    std::vector<int> order(g.n);
    for (std::int64_t turn = 1; turn <= cap; ++turn) {
        const Player player = (turn % 2 == 1) ? first : other(first);
        const StrategyKind kind = (player == Player::Min) ? min_strategy : max_strategy;
        int v;
        if (!frac.ended()) {
            frac.step(frac.choose(kind));
            if (frac.ended()) result.len_frac_kn = turn;
            // A move is a column of the sorted grid; the mirrored chip goes
            // to the vertex holding the same column in the mirrored game's
            // own sorted configuration.  Mirroring raw vertex ids instead
            // lets the two configurations drift apart and the mirrored
            // game degenerate toward its worst-case length.
            const int col = frac.last_column() - 1;
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
                return real.chips()[x] > real.chips()[y];
            });
            v = order[col];
        } else {
            v = choose_on_config(g, real.chips(), p, kind);
        }
        if (!real.ended()) {
            if (real.place(v)) result.len_g = turn;
        }
        if (frac.ended() && real.ended()) return result;
    }
    throw std::runtime_error("coupled_replay: turn cap exceeded");
}

}  // namespace toppling
