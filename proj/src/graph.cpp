#include "toppling/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "toppling/rng.hpp"

namespace toppling {

namespace {

// Label components and count their vertices/edges.
void finalize(Graph& g) {
    g.deg.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::sort(g.adj[v].begin(), g.adj[v].end());
        g.deg[v] = static_cast<int>(g.adj[v].size());
    }
    g.comp_id.assign(g.n, -1);
    g.comp_size.clear();
    g.comp_edges.clear();
    std::deque<int> queue;
    for (int s = 0; s < g.n; ++s) {
        if (g.comp_id[s] >= 0) continue;
        const int id = static_cast<int>(g.comp_size.size());
        std::int64_t vertices = 0, degree_sum = 0;
        g.comp_id[s] = id;
        queue.push_back(s);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            ++vertices;
            degree_sum += g.deg[v];
            for (int u : g.adj[v]) {
                if (g.comp_id[u] < 0) {
                    g.comp_id[u] = id;
                    queue.push_back(u);
                }
            }
        }
        g.comp_size.push_back(vertices);
        g.comp_edges.push_back(degree_sum / 2);
    }
}

}  // namespace

std::int64_t Graph::edge_count() const {
    std::int64_t s = 0;
    for (int v = 0; v < n; ++v) s += deg[v];
    return s / 2;
}

bool Graph::is_complete() const {
    for (int v = 0; v < n; ++v)
        if (deg[v] != n - 1) return false;
    return true;
}

bool Graph::has_isolated_vertex() const {
    for (int v = 0; v < n; ++v)
        if (deg[v] == 0) return true;
    return false;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
    Graph g;
    g.n = n;
    g.adj.resize(n);
    for (int v = 0; v < n; ++v) {
        g.adj[v].reserve(n - 1);
        for (int u = 0; u < n; ++u)
            if (u != v) g.adj[v].push_back(u);
    }
    finalize(g);
    return g;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("from_edge_list: negative vertex count");
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("from_edge_list: endpoint out of range");
        if (u == v) throw std::invalid_argument("from_edge_list: loop edge");
        dedup.insert({std::min(u, v), std::max(u, v)});
    }
    Graph g;
    g.n = n;
    g.adj.resize(n);
    for (auto [u, v] : dedup) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    finalize(g);
    return g;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_gnp: n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p outside [0,1]");
    Graph g;
    g.n = n;
    g.adj.resize(n);
    if (p > 0.0) {
        if (p >= 1.0) {
            return complete_graph(n);
        }
        Rng rng(seed);
        // Pairs indexed lexicographically: (0,1),(0,2),...,(n-2,n-1).
        const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const double log1mp = std::log1p(-p);
        std::int64_t idx = -1;
        for (;;) {
            double u = rng.uniform01();
            if (u <= 0.0) u = 0x1.0p-53;
            const double skip = std::floor(std::log(u) / log1mp);
            if (skip > static_cast<double>(total)) break;
            idx += 1 + static_cast<std::int64_t>(skip);
            if (idx >= total) break;
            // Invert pair index -> (a, b).
            std::int64_t a = 0;
            std::int64_t rem = idx;
            std::int64_t row = n - 1;
            while (rem >= row) {
                rem -= row;
                --row;
                ++a;
            }
            const std::int64_t b = a + 1 + rem;
            g.adj[a].push_back(static_cast<int>(b));
            g.adj[b].push_back(static_cast<int>(a));
        }
    }
    finalize(g);
    return g;
}

Graph read_edge_list(std::istream& in) {
    int n = 0;
    std::int64_t m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: bad header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (std::int64_t i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated");
        edges.emplace_back(u, v);
    }
    return from_edge_list(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out << u << ' ' << v << '\n';
}

ExpansionReport expansion_report(const Graph& g, double p, int depth, int sample,
                                 std::uint64_t seed, double rel_tol) {
    if (depth < 1) throw std::invalid_argument("expansion_report: depth must be >= 1");
    if (sample < 0 || sample > g.n)
        throw std::invalid_argument("expansion_report: sample out of range");
    ExpansionReport rep;
    rep.d = p * (g.n - 1);
    rep.rel_tol = rel_tol;
    if (g.n > 0) {
        rep.deg_min = *std::min_element(g.deg.begin(), g.deg.end());
        rep.deg_max = *std::max_element(g.deg.begin(), g.deg.end());
        double sum = 0.0;
        for (int d : g.deg) sum += d;
        rep.deg_mean = sum / g.n;
    }

    Rng rng(seed);
    std::vector<int> dist(g.n);
    std::deque<int> queue;
    for (int s = 0; s < sample; ++s) {
        const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n)));
        ExpansionReport::VertexShells vs;
        vs.v = v;
        vs.shells.assign(depth, 0);
        std::fill(dist.begin(), dist.end(), -1);
        dist[v] = 0;
        queue.push_back(v);
        while (!queue.empty()) {
            const int w = queue.front();
            queue.pop_front();
            if (dist[w] >= depth) continue;
            for (int u : g.adj[w]) {
                if (dist[u] < 0) {
                    dist[u] = dist[w] + 1;
                    vs.shells[dist[u] - 1] += 1;
                    queue.push_back(u);
                }
            }
        }
        // Expected shell sizes follow d^i until the graph runs out of
        // fresh vertices; cap by the remainder so dense graphs with
        // saturated second shells are not flagged wholesale.
        double remaining = g.n - 1;
        for (int i = 1; i <= depth; ++i) {
            const double expect = std::min(std::pow(rep.d, i), remaining);
            remaining -= expect;
            if (std::abs(static_cast<double>(vs.shells[i - 1]) - expect) > rel_tol * expect)
                vs.flagged = true;
        }
        rep.samples.push_back(std::move(vs));
    }
    return rep;
}

}  // namespace toppling
