#include "toppling/chipfire.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace toppling {

ChipConfig::ChipConfig(const Graph& g, std::vector<std::int64_t> c)
    : graph(&g), chips(std::move(c)) {
    if (static_cast<int>(chips.size()) != g.n)
        throw std::invalid_argument("ChipConfig: size mismatch");
    for (std::int64_t x : chips)
        if (x < 0) throw std::invalid_argument("ChipConfig: negative chip count");
}

std::int64_t ChipConfig::total() const {
    std::int64_t s = 0;
    for (std::int64_t x : chips) s += x;
    return s;
}

void fire(ChipConfig& c, int v) {
    const Graph& g = *c.graph;
    if (v < 0 || v >= g.n) throw std::invalid_argument("fire: vertex out of range");
    if (c.chips[v] < g.deg[v]) throw std::invalid_argument("fire: vertex not eligible");
    c.chips[v] -= g.deg[v];
    for (int u : g.adj[v]) ++c.chips[u];
}

namespace {

StabilizeOutcome detect_isolated(const Graph& g) {
    StabilizeOutcome out;
    out.tag = Volatility::Volatile;
    out.fired.assign(g.n, false);
    for (int v = 0; v < g.n; ++v)
        if (g.deg[v] == 0) out.fired[v] = true;
    return out;
}

}  // namespace

StabilizeOutcome stabilize_or_detect(const ChipConfig& c) {
    const Graph& g = *c.graph;
    if (g.has_isolated_vertex()) return detect_isolated(g);

    StabilizeOutcome out;
    out.chips = c.chips;
    out.fire_counts.assign(g.n, 0);
    out.fired.assign(g.n, false);
    std::vector<std::int64_t> comp_unfired(g.comp_size.begin(), g.comp_size.end());

    std::deque<int> queue;
    std::vector<bool> queued(g.n, false);
    for (int v = 0; v < g.n; ++v) {
        if (out.chips[v] >= g.deg[v]) {
            queue.push_back(v);
            queued[v] = true;
        }
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        queued[v] = false;
        if (out.chips[v] < g.deg[v]) continue;
        out.chips[v] -= g.deg[v];
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
            if (++out.chips[u] >= g.deg[u] && !queued[u]) {
                queue.push_back(u);
                queued[u] = true;
            }
        }
        if (out.chips[v] >= g.deg[v] && !queued[v]) {
            queue.push_back(v);
            queued[v] = true;
        }
    }
    out.tag = Volatility::Stable;
    return out;
}

StabilizeOutcome stabilize_with_policy(
    const ChipConfig& c,
    const std::function<std::size_t(const std::vector<int>&)>& pick) {
    const Graph& g = *c.graph;
    if (g.has_isolated_vertex()) return detect_isolated(g);

    StabilizeOutcome out;
    out.chips = c.chips;
    out.fire_counts.assign(g.n, 0);
    out.fired.assign(g.n, false);
    std::vector<std::int64_t> comp_unfired(g.comp_size.begin(), g.comp_size.end());

    std::vector<int> eligible;
    for (;;) {
        eligible.clear();
        for (int v = 0; v < g.n; ++v)
            if (out.chips[v] >= g.deg[v]) eligible.push_back(v);
        if (eligible.empty()) break;
        const std::size_t i = pick(eligible);
        if (i >= eligible.size()) throw std::logic_error("policy picked out of range");
        const int v = eligible[i];
        out.chips[v] -= g.deg[v];
        for (int u : g.adj[v]) ++out.chips[u];
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

bool is_volatile_complete(const ChipConfig& c) {
    const Graph& g = *c.graph;
    if (!g.is_complete()) throw std::invalid_argument("is_volatile_complete: graph not complete");
    const int n = g.n;
    bool oversized = false;
    for (std::int64_t x : c.chips)
        if (x >= n) oversized = true;
    if (oversized) {
        // Settle through the engine; a Stable result is a non-volatile
        // configuration by definition.
        return stabilize_or_detect(c).is_volatile();
    }
    std::vector<std::int64_t> sorted = c.chips;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (int i = 0; i < n; ++i)
        if (sorted[i] < n - 1 - i) return false;
    return true;
}

bool dominates(const ChipConfig& c1, const ChipConfig& c2) {
    if (c1.graph != c2.graph) throw std::invalid_argument("dominates: mismatched graphs");
    for (int v = 0; v < c1.graph->n; ++v)
        if (c1.chips[v] < c2.chips[v]) return false;
    return true;
}

void write_snapshot(std::ostream& out, const ChipConfig& c) {
    for (int v = 0; v < c.graph->n; ++v)
        if (c.chips[v] != 0) out << v << ' ' << c.chips[v] << '\n';
}

ChipConfig read_snapshot(std::istream& in, const Graph& g) {
    ChipConfig c(g);
    int v = 0;
    std::int64_t amount = 0;
    while (in >> v >> amount) {
        if (v < 0 || v >= g.n) throw std::runtime_error("snapshot: vertex out of range");
        if (amount < 0) throw std::runtime_error("snapshot: negative chip count");
        c.chips[v] = amount;
    }
    return c;
}

}  // namespace toppling
