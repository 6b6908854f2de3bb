#include "girthforge/analysis.hpp"

#include <algorithm>

#include "girthforge/parallel.hpp"

namespace girthforge {

int32_t LayerDecomposition::last_common_ancestor(int32_t u, int32_t v) const {
    while (dist[u] > dist[v]) u = parent[u];
    while (dist[v] > dist[u]) v = parent[v];
    while (u != v) { u = parent[u]; v = parent[v]; }
    return u;
}

LayerDecomposition bfs_layers(const Graph& g, int32_t root, int depth) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw BadParameters("root out of range");
    LayerDecomposition ld;
    ld.root = root;
    ld.depth = depth;
    ld.dist.assign(n, -1);
    ld.parent.assign(n, -1);
    ld.layers.assign(depth + 1, {});
    ld.dist[root] = 0;
    ld.layers[0].push_back(root);
    std::vector<int32_t> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        if (ld.dist[u] >= depth) continue;
        for (int32_t v : g.neighbors(u)) {
            if (ld.dist[v] == -1) {
                ld.dist[v] = ld.dist[u] + 1;
                ld.parent[v] = u;
                ld.layers[ld.dist[v]].push_back(v);
                queue.push_back(v);
            }
        }
    }
    return ld;
}

namespace {

// DFS over the alternating pattern x1 y1 x2 y2 x3 y3 x4 (in_x[i] tells which side the
// i-th pattern vertex lies on). Extends in ascending neighbour order.
bool six_path_dfs(const Graph& g, const std::vector<int8_t>& side, int pos,
                  std::vector<int32_t>& path, std::vector<int8_t>& used, long long& budget) {
    if (pos == 7) return true;
    const int want = pos % 2 == 0 ? 0 : 1;  // even positions are x's
    for (int32_t v : g.neighbors(path[pos - 1])) {
        if (side[v] != want || used[v]) continue;
        if (--budget < 0) throw ResourceLimit("six_path_check extension budget exhausted");
        path.push_back(v);
        used[v] = 1;
        if (six_path_dfs(g, side, pos + 1, path, used, budget)) return true;
        used[v] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int32_t>> six_path_check(const Graph& g,
                                                   const LayerDecomposition& layers, int t,
                                                   SixPathClaim which, long long budget) {
    const int lx = which == SixPathClaim::Claim1 ? t - 1 : t;
    const int ly = lx + 1;
    if (lx < 0 || ly > layers.depth)
        throw BadParameters("layers not computed deep enough for the claim");
    const int n = g.vertex_count();
    std::vector<int8_t> side(n, -1);
    for (int32_t v : layers.layers[lx]) side[v] = 0;
    for (int32_t v : layers.layers[ly]) side[v] = 1;

    std::vector<int8_t> used(n, 0);
    for (int32_t x1 : layers.layers[lx]) {
        std::vector<int32_t> path{x1};
        used[x1] = 1;
        if (six_path_dfs(g, side, 1, path, used, budget)) return path;
        used[x1] = 0;
    }
    return std::nullopt;
}

BottleneckCounts count_bottlenecks(const Graph& g, int32_t root, int t) {
    if (t < 1) throw BadParameters("t >= 1 required");
    LayerDecomposition ld = bfs_layers(g, root, t + 1);
    BottleneckCounts counts;
    auto in_layer = [&](int32_t v, int layer) { return ld.dist[v] == layer; };
    for (int32_t u : ld.layers[t]) {
        int up = 0;
        for (int32_t w : g.neighbors(u))
            if (in_layer(w, t - 1)) ++up;
        if (up >= 4) ++counts.type1;
        for (int32_t w : g.neighbors(u))
            if (in_layer(w, t) && w > u) ++counts.type3;
    }
    if (t + 1 <= ld.depth) {
        for (int32_t v : ld.layers[t + 1]) {
            int down = 0;
            for (int32_t w : g.neighbors(v))
                if (in_layer(w, t)) ++down;
            if (down >= 4) counts.type2 += down;
        }
    }
    return counts;
}

DensityReport power_neighborhood_density(const Graph& g, int t, int d, int vertex_limit,
                                         int threads) {
    const int n = g.vertex_count();
    if (n > vertex_limit) throw ResourceLimit("power_neighborhood_density vertex limit");
    if (max_degree(g) > d) throw BadParameters("graph exceeds the stated maximum degree");

    // Sorted distance-t balls for every vertex.
    std::vector<std::vector<int32_t>> ball(n);
    parallel_for(n, threads, [&](long long v) {
        std::vector<int32_t> dist;
        bfs_distances(g, static_cast<int>(v), dist, t);
        for (int u = 0; u < n; ++u)
            if (dist[u] >= 0) ball[v].push_back(u);
    });

    std::vector<long long> spanning(n, 0);
    parallel_for(n, threads, [&](long long v) {
        const auto& nb = ball[v];
        long long total = 0;
        for (int32_t x : nb) {
            if (x == static_cast<int32_t>(v)) continue;
            // |ball(x) ∩ (ball(v) \ {v, x})|
            const auto& bx = ball[x];
            size_t i = 0, j = 0;
            long long common = 0;
            while (i < bx.size() && j < nb.size()) {
                if (bx[i] < nb[j]) ++i;
                else if (bx[i] > nb[j]) ++j;
                else {
                    if (bx[i] != static_cast<int32_t>(v) && bx[i] != x) ++common;
                    ++i; ++j;
                }
            }
            total += common;
        }
        spanning[v] = total / 2;
    });

    DensityReport rep;
    for (int v = 0; v < n; ++v) {
        if (spanning[v] > rep.measured_max) {
            rep.measured_max = spanning[v];
            rep.argmax_vertex = v;
        }
    }
    rep.bound = (2.0 + 11.0 * t);
    for (int i = 0; i < 2 * t - 1; ++i) rep.bound *= d;
    rep.within_bound = static_cast<double>(rep.measured_max) <= rep.bound;
    return rep;
}

PathBoundReport neighborhood_path_bound(const Graph& g, int k, int d) {
    if (k < 4) throw BadParameters("k >= 4 required");
    PathBoundReport rep;
    rep.bound = static_cast<double>(k - 3) * d / 2.0;
    auto cycles = forbidden_cycles(g, {k});
    rep.hypothesis_holds = !cycles.per_length.at(k).has_value();

    const int n = g.vertex_count();
    std::vector<int8_t> mark(n, 0);
    for (int x = 0; x < n; ++x) {
        for (int32_t u : g.neighbors(x)) mark[u] = 1;
        long long inside = 0;
        for (int32_t u : g.neighbors(x))
            for (int32_t w : g.neighbors(u))
                if (mark[w] && w > u) ++inside;
        rep.measured_max = std::max(rep.measured_max, inside);
        for (int32_t u : g.neighbors(x)) mark[u] = 0;
    }
    rep.applicable = rep.hypothesis_holds;
    rep.within_bound = static_cast<double>(rep.measured_max) <= rep.bound;
    return rep;
}

AnalysisReport analyze_roots(const Graph& g, int t, const std::vector<int32_t>& roots,
                             int threads) {
    AnalysisReport report;
    report.t = t;
    report.d = max_degree(g);
    report.roots.resize(roots.size());
    parallel_for(static_cast<long long>(roots.size()), threads, [&](long long idx) {
        const int32_t root = roots[idx];
        RootAnalysis ra;
        ra.root = root;
        LayerDecomposition ld = bfs_layers(g, root, t + 1);
        for (const auto& layer : ld.layers) ra.layer_sizes.push_back(layer.size());
        ra.bottlenecks = count_bottlenecks(g, root, t);
        if (t >= 1) {
            ra.claim1_witness = six_path_check(g, ld, t, SixPathClaim::Claim1);
            ra.claim2_witness = six_path_check(g, ld, t, SixPathClaim::Claim2);
            ra.claim1_ok = !ra.claim1_witness.has_value();
            ra.claim2_ok = !ra.claim2_witness.has_value();
        }
        // Unordered pairs of the punctured t-ball within distance t of one another.
        std::vector<int32_t> ball_members;
        LayerDecomposition lt = bfs_layers(g, root, t);
        for (int i = 1; i <= t && i < static_cast<int>(lt.layers.size()); ++i)
            for (int32_t v : lt.layers[i]) ball_members.push_back(v);
        std::sort(ball_members.begin(), ball_members.end());
        long long pairs = 0;
        std::vector<int32_t> dist;
        for (int32_t u : ball_members) {
            bfs_distances(g, u, dist, t);
            for (int32_t v : ball_members)
                if (v > u && dist[v] >= 0) ++pairs;
        }
        ra.pairs_within_t = pairs;
        report.roots[idx] = std::move(ra);
    });
    return report;
}

}  // namespace girthforge
