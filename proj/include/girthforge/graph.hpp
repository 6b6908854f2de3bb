#ifndef GIRTHFORGE_GRAPH_HPP
#define GIRTHFORGE_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "girthforge/errors.hpp"

namespace girthforge {

// Immutable simple undirected graph. Vertex ids are 0..n-1; adjacency lists are
// sorted and duplicate-free; loops and parallel edges are dropped at construction.
class Graph {
public:
    Graph() = default;

    // Collapses duplicates and loops. Edges may be given in either orientation.
    static Graph from_edges(int n, std::vector<std::pair<int32_t, int32_t>> edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    std::span<const int32_t> neighbors(int v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    bool adjacent(int u, int v) const;

    // Sorted (u, v) pairs with u < v.
    std::vector<std::pair<int32_t, int32_t>> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }
    const std::map<std::string, std::string>& metadata() const { return metadata_; }
    void set_metadata(std::map<std::string, std::string> m) { metadata_ = std::move(m); }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && offsets_ == o.offsets_ && neighbors_ == o.neighbors_;
    }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<int64_t> offsets_{0};
    std::vector<int32_t> neighbors_;
    std::vector<std::string> labels_;
    std::map<std::string, std::string> metadata_;
};

// ---- primitive measurements ----

int max_degree(const Graph& g);
bool is_regular(const Graph& g);

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<int8_t> side;       // 0/1 per vertex (valid if bipartite)
    std::vector<int32_t> odd_cycle; // witness cycle if not bipartite
};
BipartiteCheck is_bipartite(const Graph& g);

// Length of a shortest cycle; nullopt for forests. Exact: BFS from every vertex with
// parent-edge exclusion, pruned by the best bound found so far.
std::optional<int> girth(const Graph& g, int threads = 1);

// d^t + 1; throws Overflow if d^t does not fit in unsigned long long.
unsigned long long trivial_upper_bound(int d, int t);

// G^t on the same vertex set via depth-limited BFS per vertex.
// Throws ResourceLimit if more than edge_budget edges would be produced.
Graph power(const Graph& g, int t, long long edge_budget = 100000000LL);

struct FailingPair {
    int32_t u = 0, v = 0;
    long long distance = -1;  // exact distance; -1 means disconnected
};

struct CliqueCertificate {
    int t = 0;
    std::vector<int32_t> subset;
    bool verified = false;
    std::vector<FailingPair> failures;
};

// Certifies that every unordered pair of s is at distance <= t, by BFS to depth t
// from each vertex of s (G^t is never materialized).
CliqueCertificate verify_clique_in_power(const Graph& g, int t, std::vector<int32_t> s,
                                         int threads = 1);

enum class ColorOrder { Natural, Degeneracy };

struct Coloring {
    std::vector<int> color;
    int count = 0;
};
Coloring greedy_color(const Graph& g, ColorOrder order);

// For each requested length, either a witness cycle of exactly that length or
// proof of absence (exhaustive DFS with distance pruning). Witness vertices are in
// cycle order; absent is an empty optional.
struct CycleSearch {
    std::map<int, std::optional<std::vector<int32_t>>> per_length;
};
CycleSearch forbidden_cycles(const Graph& g, const std::vector<int>& lengths,
                             long long node_budget = 100000000LL);

// BFS distances from src, -1 for unreachable; depth_limit < 0 means unbounded.
void bfs_distances(const Graph& g, int src, std::vector<int32_t>& dist, int depth_limit = -1);

}  // namespace girthforge

#endif
