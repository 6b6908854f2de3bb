#include "girthforge/graph.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "girthforge/parallel.hpp"

namespace girthforge {

Graph Graph::from_edges(int n, std::vector<std::pair<int32_t, int32_t>> edges) {
    if (n < 0) throw BadParameters("negative vertex count");
    Graph g;
    g.n_ = n;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadParameters("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    // Drop loops.
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const auto& e) { return e.first == e.second; }),
                edges.end());
    g.m_ = static_cast<long long>(edges.size());

    std::vector<int64_t> deg(n + 1, 0);
    for (const auto& [u, v] : edges) { ++deg[u + 1]; ++deg[v + 1]; }
    g.offsets_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i + 1];
    g.neighbors_.resize(static_cast<size_t>(g.offsets_[n]));
    std::vector<int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbors_[static_cast<size_t>(cursor[u]++)] = v;
        g.neighbors_[static_cast<size_t>(cursor[v]++)] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(g.neighbors_.begin() + g.offsets_[v], g.neighbors_.begin() + g.offsets_[v + 1]);
    return g;
}

bool Graph::adjacent(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int32_t, int32_t>> Graph::edges() const {
    std::vector<std::pair<int32_t, int32_t>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int32_t v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_regular(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    BipartiteCheck res;
    res.side.assign(n, -1);
    std::vector<int32_t> parent(n, -1), depth(n, 0), queue;
    queue.reserve(n);
    for (int root = 0; root < n; ++root) {
        if (res.side[root] != -1) continue;
        res.side[root] = 0;
        queue.clear();
        queue.push_back(root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int32_t v : g.neighbors(u)) {
                if (res.side[v] == -1) {
                    res.side[v] = static_cast<int8_t>(1 - res.side[u]);
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (res.side[v] == res.side[u]) {
                    // Odd cycle: join u and v through their common BFS ancestor.
                    std::vector<int32_t> pu{u}, pv{v};
                    int a = u, b = v;
                    while (depth[a] > depth[b]) { a = parent[a]; pu.push_back(a); }
                    while (depth[b] > depth[a]) { b = parent[b]; pv.push_back(b); }
                    while (a != b) {
                        a = parent[a]; pu.push_back(a);
                        b = parent[b]; pv.push_back(b);
                    }
                    res.odd_cycle.assign(pu.begin(), pu.end());
                    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)
                        res.odd_cycle.push_back(*it);
                    res.bipartite = false;
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

namespace {

// Stamped BFS scratch: avoids O(n) reinitialization per source.
struct BfsScratch {
    std::vector<int32_t> dist;
    std::vector<int32_t> parent;
    std::vector<uint32_t> stamp;
    std::vector<int32_t> queue;
    uint32_t epoch = 0;

    void ensure(int n) {
        if (static_cast<int>(dist.size()) < n) {
            dist.resize(n);
            parent.resize(n);
            stamp.assign(n, 0);
            epoch = 0;
        }
        ++epoch;
        if (epoch == 0) {  // wrapped
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
        queue.clear();
    }
    bool seen(int v) const { return stamp[v] == epoch; }
    void visit(int v, int d, int p) {
        stamp[v] = epoch;
        dist[v] = d;
        parent[v] = p;
        queue.push_back(v);
    }
};

thread_local BfsScratch tls_scratch;

}  // namespace

void bfs_distances(const Graph& g, int src, std::vector<int32_t>& dist, int depth_limit) {
    const int n = g.vertex_count();
    dist.assign(n, -1);
    std::vector<int32_t> queue;
    queue.reserve(n);
    dist[src] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        if (depth_limit >= 0 && dist[u] >= depth_limit) continue;
        for (int32_t v : g.neighbors(u)) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

std::optional<int> girth(const Graph& g, int threads) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    std::atomic<int> best{std::numeric_limits<int>::max()};

    parallel_for(n, threads, [&](long long root_ll) {
        const int root = static_cast<int>(root_ll);
        int bound = best.load(std::memory_order_relaxed);
        if (bound == 3) return;  // nothing shorter exists
        // A cycle of length < bound through root has its far edge within depth bound/2.
        const int depth_cap = bound == std::numeric_limits<int>::max()
                                  ? std::numeric_limits<int>::max()
                                  : bound / 2;
        auto& s = tls_scratch;
        s.ensure(n);
        s.visit(root, 0, -1);
        for (size_t head = 0; head < s.queue.size(); ++head) {
            int u = s.queue[head];
            if (s.dist[u] >= depth_cap) break;
            for (int32_t v : g.neighbors(u)) {
                if (!s.seen(v)) {
                    s.visit(v, s.dist[u] + 1, u);
                } else if (v != s.parent[u]) {
                    int cand = s.dist[u] + s.dist[v] + 1;
                    int cur = best.load(std::memory_order_relaxed);
                    while (cand < cur &&
                           !best.compare_exchange_weak(cur, cand, std::memory_order_relaxed)) {
                    }
                }
            }
        }
    });
    int b = best.load();
    if (b == std::numeric_limits<int>::max()) return std::nullopt;
    return b;
}

unsigned long long trivial_upper_bound(int d, int t) {
    if (d < 1 || t < 1) throw BadParameters("d >= 1 and t >= 1 required");
    unsigned long long r = 1;
    for (int i = 0; i < t; ++i) {
        if (r > std::numeric_limits<unsigned long long>::max() / static_cast<unsigned>(d))
            throw Overflow("d^t exceeds 64-bit range");
        r *= static_cast<unsigned>(d);
    }
    if (r == std::numeric_limits<unsigned long long>::max())
        throw Overflow("d^t + 1 exceeds 64-bit range");
    return r + 1;
}

Graph power(const Graph& g, int t, long long edge_budget) {
    if (t < 1) throw BadParameters("t >= 1 required");
    const int n = g.vertex_count();
    std::vector<std::pair<int32_t, int32_t>> edges;
    auto& s = tls_scratch;
    long long produced = 0;
    for (int u = 0; u < n; ++u) {
        s.ensure(n);
        s.visit(u, 0, -1);
        for (size_t head = 0; head < s.queue.size(); ++head) {
            int x = s.queue[head];
            if (s.dist[x] >= t) continue;
            for (int32_t y : g.neighbors(x))
                if (!s.seen(y)) s.visit(y, s.dist[x] + 1, x);
        }
        for (int32_t v : s.queue) {
            if (v > u) {
                if (++produced > edge_budget)
                    throw ResourceLimit("power edge budget exceeded (" +
                                        std::to_string(edge_budget) + ")");
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

CliqueCertificate verify_clique_in_power(const Graph& g, int t, std::vector<int32_t> s,
                                         int threads) {
    if (t < 1) throw BadParameters("t >= 1 required");
    const int n = g.vertex_count();
    for (int32_t v : s)
        if (v < 0 || v >= n) throw BadParameters("subset vertex out of range");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    CliqueCertificate cert;
    cert.t = t;
    cert.subset = s;

    const size_t k = s.size();
    std::vector<char> in_subset(n, 0);
    for (int32_t v : s) in_subset[v] = 1;

    // Per-source list of unreached later subset members (slot-indexed: deterministic).
    std::vector<std::vector<int32_t>> unreached(k);
    parallel_for(static_cast<long long>(k), threads, [&](long long idx) {
        const int32_t src = s[idx];
        auto& sc = tls_scratch;
        sc.ensure(n);
        sc.visit(src, 0, -1);
        for (size_t head = 0; head < sc.queue.size(); ++head) {
            int u = sc.queue[head];
            if (sc.dist[u] >= t) continue;
            for (int32_t v : g.neighbors(u))
                if (!sc.seen(v)) sc.visit(v, sc.dist[u] + 1, u);
        }
        for (size_t j = idx + 1; j < k; ++j)
            if (!sc.seen(s[j])) unreached[idx].push_back(s[j]);
    });

    for (size_t i = 0; i < k; ++i) {
        if (unreached[i].empty()) continue;
        // Exact distances for the witnesses via one unbounded BFS.
        std::vector<int32_t> dist;
        bfs_distances(g, s[i], dist);
        for (int32_t v : unreached[i])
            cert.failures.push_back({s[i], v, dist[v]});
    }
    cert.verified = cert.failures.empty();
    return cert;
}

Coloring greedy_color(const Graph& g, ColorOrder order) {
    const int n = g.vertex_count();
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    if (order == ColorOrder::Degeneracy) {
        // Repeatedly remove a minimum-degree vertex; color in reverse removal order.
        std::vector<int> deg(n), removed(n, 0), removal;
        removal.reserve(n);
        for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
        std::vector<std::vector<int>> buckets(n + 1);
        std::vector<int> pos_deg(deg.begin(), deg.end());
        for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
        int scan = 0;
        for (int iter = 0; iter < n; ++iter) {
            if (scan > 0) --scan;  // degrees only drop by one per removal
            int v = -1;
            for (; scan <= n; ++scan) {
                auto& b = buckets[scan];
                while (!b.empty()) {
                    int cand = b.back();
                    if (removed[cand] || pos_deg[cand] != scan) { b.pop_back(); continue; }
                    v = cand;
                    b.pop_back();
                    break;
                }
                if (v != -1) break;
            }
            removed[v] = 1;
            removal.push_back(v);
            for (int32_t w : g.neighbors(v)) {
                if (!removed[w]) {
                    --pos_deg[w];
                    buckets[pos_deg[w]].push_back(w);
                }
            }
        }
        std::reverse(removal.begin(), removal.end());
        seq = removal;
    }

    Coloring res;
    res.color.assign(n, -1);
    std::vector<int> mark(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = seq[i];
        for (int32_t w : g.neighbors(v))
            if (res.color[w] != -1) mark[res.color[w]] = i;
        int c = 0;
        while (mark[c] == i) ++c;
        res.color[v] = c;
        res.count = std::max(res.count, c + 1);
    }
    return res;
}

namespace {

// DFS extension of a path v0..v_cur looking for a cycle of exactly `len` through v0,
// restricted to vertices >= v0. dist_to_start prunes unclosable branches.
bool cycle_dfs(const Graph& g, int len, int depth, int cur,
               const std::vector<int32_t>& dist_to_start, std::vector<int32_t>& path,
               std::vector<char>& on_path, long long& budget) {
    const int start = path[0];
    if (depth == len - 1) {
        if (g.adjacent(cur, start)) return true;
        return false;
    }
    for (int32_t nxt : g.neighbors(cur)) {
        if (nxt <= start || on_path[nxt]) continue;
        if (dist_to_start[nxt] < 0 || dist_to_start[nxt] > len - depth - 1) continue;
        if (--budget < 0) throw ResourceLimit("forbidden_cycles extension budget exhausted");
        path.push_back(nxt);
        on_path[nxt] = 1;
        if (cycle_dfs(g, len, depth + 1, nxt, dist_to_start, path, on_path, budget)) return true;
        on_path[nxt] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

CycleSearch forbidden_cycles(const Graph& g, const std::vector<int>& lengths,
                             long long node_budget) {
    const int n = g.vertex_count();
    for (int len : lengths)
        if (len < 3) throw BadParameters("cycle length >= 3 required");
    if (n > 100000) throw ResourceLimit("forbidden_cycles limited to 1e5 vertices");

    CycleSearch out;
    long long budget = node_budget;
    std::vector<int32_t> dist;
    std::vector<char> on_path(n, 0);
    for (int len : lengths) {
        std::optional<std::vector<int32_t>> witness;
        for (int s = 0; s < n && !witness; ++s) {
            bfs_distances(g, s, dist, len);  // restricted-graph distance is >= this
            std::vector<int32_t> path{s};
            on_path.assign(n, 0);
            on_path[s] = 1;
            if (cycle_dfs(g, len, 0, s, dist, path, on_path, budget)) witness = path;
        }
        out.per_length[len] = std::move(witness);
    }
    return out;
}

}  // namespace girthforge
