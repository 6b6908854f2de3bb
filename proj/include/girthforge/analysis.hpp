#ifndef GIRTHFORGE_ANALYSIS_HPP
#define GIRTHFORGE_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

// Exact distance layers from a root, with the BFS tree for ancestor queries.
struct LayerDecomposition {
    int32_t root = 0;
    int depth = 0;
    std::vector<std::vector<int32_t>> layers;  // layers[i] = vertices at distance i
    std::vector<int32_t> dist;                 // -1 beyond depth / unreachable
    std::vector<int32_t> parent;

    int layer_of(int v) const { return dist[v]; }
    // Last common ancestor in the BFS tree (both vertices must be reached).
    int32_t last_common_ancestor(int32_t u, int32_t v) const;
};

LayerDecomposition bfs_layers(const Graph& g, int32_t root, int depth);

enum class SixPathClaim { Claim1, Claim2 };

// Searches G[X u Y] for a 6-edge path x1 y1 x2 y2 x3 y3 x4 with all x_i in X and all
// y_i in Y, where (X, Y) = (A_{t-1}, A_t) for claim 1 and (A_t, A_{t+1}) for claim 2.
// Returns the first witness in lexicographic DFS order, or nullopt.
std::optional<std::vector<int32_t>> six_path_check(const Graph& g,
                                                   const LayerDecomposition& layers, int t,
                                                   SixPathClaim which,
                                                   long long budget = 10000000LL);

struct BottleneckCounts {
    long long type1 = 0;  // vertices u in A_t with >= 4 neighbours in A_{t-1}
    long long type2 = 0;  // edges uv, u in A_t, v in A_{t+1}, v with >= 4 neighbours in A_t
    long long type3 = 0;  // edges inside A_t
};

BottleneckCounts count_bottlenecks(const Graph& g, int32_t root, int t);

struct DensityReport {
    long long measured_max = 0;   // max over v of pairs within distance t in N_{G^t}(v)
    double bound = 0;             // (2 + 11 t) d^(2t-1)
    bool within_bound = false;
    int32_t argmax_vertex = -1;
};

// Exact edges spanning the neighbourhood of each vertex of G^t, via all-pairs BFS.
// Requires max degree <= d. Throws ResourceLimit beyond vertex_limit.
DensityReport power_neighborhood_density(const Graph& g, int t, int d,
                                         int vertex_limit = 20000, int threads = 1);

struct PathBoundReport {
    long long measured_max = 0;  // max over x of edges inside G[N(x)]
    double bound = 0;            // (k - 3) d / 2
    bool hypothesis_holds = false;  // no k-cycle found
    bool within_bound = false;
    bool applicable = false;        // comparison meaningful only under the hypothesis
};

PathBoundReport neighborhood_path_bound(const Graph& g, int k, int d);

// Aggregated per-root report used by the CLI.
struct RootAnalysis {
    int32_t root = 0;
    std::vector<long long> layer_sizes;
    BottleneckCounts bottlenecks;
    bool claim1_ok = true, claim2_ok = true;
    std::optional<std::vector<int32_t>> claim1_witness, claim2_witness;
    long long pairs_within_t = 0;  // unordered pairs of the t-ball (minus root) within t
};

struct AnalysisReport {
    int t = 0;
    int d = 0;
    std::vector<RootAnalysis> roots;
};

AnalysisReport analyze_roots(const Graph& g, int t, const std::vector<int32_t>& roots,
                             int threads = 1);

}  // namespace girthforge

#endif
