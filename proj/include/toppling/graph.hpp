#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace toppling {

// Simple undirected graph with sorted adjacency lists.  Immutable after
// construction; may be shared across threads for reading.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbour lists
    std::vector<int> deg;

    // Connected-component bookkeeping, filled in at construction.
    std::vector<int> comp_id;             // per vertex
    std::vector<std::int64_t> comp_size;  // vertices per component
    std::vector<std::int64_t> comp_edges; // edges per component

    int components() const { return static_cast<int>(comp_size.size()); }
    std::int64_t edge_count() const;
    bool is_complete() const;
    bool has_isolated_vertex() const;
};

Graph complete_graph(int n);
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// G(n,p): each of the n(n-1)/2 pairs kept independently with probability p.
// Deterministic in (n, p, seed) across platforms.  Uses geometric skipping,
// O(m) expected time.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// Edge-list file format: first line "n m", then m lines "u v" (0-indexed,
// ASCII decimal).  Writer emits u < v, sorted lexicographically.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

struct ExpansionReport {
    double d = 0.0;  // expected degree p(n-1)
    int deg_min = 0, deg_max = 0;
    double deg_mean = 0.0;
    double rel_tol = 0.0;
    struct VertexShells {
        int v = 0;
        std::vector<std::int64_t> shells;  // |N(v,i)|, i = 1..depth
        bool flagged = false;              // some shell off d^i by > rel_tol
    };
    std::vector<VertexShells> samples;
};

// BFS shell sizes from `sample` uniformly chosen vertices, depth levels.
ExpansionReport expansion_report(const Graph& g, double p, int depth, int sample,
                                 std::uint64_t seed, double rel_tol = 0.5);

}  // namespace toppling
