#include "girthforge/conduit.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>

#include "girthforge/parallel.hpp"

namespace girthforge {

ConduitReport verify_conduit(const BipartiteGraph& h, int tau, std::optional<int> claimed_girth,
                             int threads) {
    ConduitReport rep;
    rep.claimed_tau = tau;
    rep.claimed_girth = claimed_girth;
    rep.balanced = h.balanced();
    rep.part_size = h.part_size();

    const Graph& g = h.graph();
    const int n = g.vertex_count();
    if (n == 0) return rep;
    rep.min_degree = g.degree(0);
    for (int v = 0; v < n; ++v) {
        rep.min_degree = std::min(rep.min_degree, g.degree(v));
        rep.max_degree = std::max(rep.max_degree, g.degree(v));
    }
    rep.regular = rep.min_degree == rep.max_degree;
    rep.measured_girth = girth(g, threads);

    const auto& a = h.a_order();
    std::vector<int32_t> far(a.size(), -1);
    std::atomic<bool> disconnected{false};
    parallel_for(static_cast<long long>(a.size()), threads, [&](long long i) {
        std::vector<int32_t> dist;
        bfs_distances(g, a[i], dist);
        int32_t mx = 0;
        for (int32_t b : h.b_order()) {
            if (dist[b] < 0) { disconnected.store(true); return; }
            mx = std::max(mx, dist[b]);
        }
        far[i] = mx;
    });
    if (disconnected.load()) {
        rep.measured_cross_distance = -1;
        rep.pass = false;
        return rep;
    }
    rep.measured_cross_distance = *std::max_element(far.begin(), far.end());
    rep.pass = rep.balanced && rep.regular && rep.measured_cross_distance <= tau &&
               (!claimed_girth || (rep.measured_girth && *rep.measured_girth == *claimed_girth));
    return rep;
}

bool verify_duality(const BipartiteGraph& h, const std::vector<int32_t>& sigma) {
    const int n = h.part_size();
    if (!h.balanced() || static_cast<int>(sigma.size()) != n) return false;
    std::vector<int8_t> used(n, 0);
    for (int32_t j : sigma) {
        if (j < 0 || j >= n || used[j]) return false;
        used[j] = 1;
    }
    // a_i ~ b_j must hold iff a_{sigma^-1(j)} ~ b_{sigma(i)}; checking every edge plus
    // degrees is enough since the map is a bijection.
    std::vector<int32_t> sigma_inv(n);
    for (int i = 0; i < n; ++i) sigma_inv[sigma[i]] = i;
    for (int i = 0; i < n; ++i) {
        for (int32_t v : h.graph().neighbors(h.a_order()[i])) {
            int j = h.index_of(v);
            if (!h.biadjacent(sigma_inv[j], sigma[i])) return false;
        }
    }
    return true;
}

namespace {

struct Bitset {
    std::vector<uint64_t> w;
    explicit Bitset(int bits = 0) : w((bits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
};

}  // namespace

DualitySearchResult find_self_duality(const BipartiteGraph& h, long long node_budget) {
    DualitySearchResult res;
    const int n = h.part_size();
    if (!h.balanced()) throw BadParameters("self-duality requires a balanced graph");
    if (n == 0) {
        res.status = DualityStatus::Found;
        res.map = DualityMap{{}, true};
        return res;
    }
    {
        std::vector<int32_t> dist;
        bfs_distances(h.graph(), 0, dist);
        for (int v = 0; v < h.graph().vertex_count(); ++v)
            if (dist[v] < 0) throw BadParameters("self-duality requires a connected graph");
    }

    const int words = (n + 63) / 64;
    // rows[i] = b-indices adjacent to a_i.
    std::vector<uint64_t> rows(static_cast<size_t>(n) * words, 0);
    for (int i = 0; i < n; ++i)
        for (int32_t j : h.row(i)) rows[static_cast<size_t>(i) * words + (j >> 6)] |= 1ULL << (j & 63);
    auto row_has = [&](int i, int j) {
        return (rows[static_cast<size_t>(i) * words + (j >> 6)] >> (j & 63)) & 1ULL;
    };

    // cand[m] = admissible values for sigma(m); snapshot per depth, copied per trial.
    std::vector<uint64_t> full(words, ~0ULL);
    if (n & 63) full[words - 1] = (1ULL << (n & 63)) - 1;
    std::vector<std::vector<uint64_t>> cand_at_depth(n + 1,
                                                     std::vector<uint64_t>(static_cast<size_t>(n) * words));
    for (int m = 0; m < n; ++m)
        std::memcpy(cand_at_depth[0].data() + static_cast<size_t>(m) * words, full.data(),
                    words * 8);

    std::vector<int32_t> sigma(n, -1);
    std::vector<int8_t> assigned(n, 0);
    long long nodes = 0;
    bool exhausted = true;

    // Depth-first: at each level pick the unassigned index with the fewest candidates.
    auto search = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        auto& cur = cand_at_depth[depth];
        int m = -1, best = n + 1;
        for (int i = 0; i < n; ++i) {
            if (assigned[i]) continue;
            int c = 0;
            const uint64_t* cw = cur.data() + static_cast<size_t>(i) * words;
            for (int w = 0; w < words; ++w) c += __builtin_popcountll(cw[w]);
            if (c < best) { best = c; m = i; if (c == 0) break; }
        }
        if (best == 0) return false;

        const uint64_t* mcand = cur.data() + static_cast<size_t>(m) * words;
        for (int w = 0; w < words; ++w) {
            uint64_t bits = mcand[w];
            while (bits) {
                int x = (w << 6) + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (++nodes > node_budget) { exhausted = false; return false; }

                auto& next = cand_at_depth[depth + 1];
                next = cur;
                assigned[m] = 1;
                sigma[m] = x;
                bool dead = false;
                const uint64_t* row_m = rows.data() + static_cast<size_t>(m) * words;
                for (int i = 0; i < n && !dead; ++i) {
                    if (assigned[i]) continue;
                    uint64_t* ci = next.data() + static_cast<size_t>(i) * words;
                    ci[x >> 6] &= ~(1ULL << (x & 63));  // injectivity
                    // sigma(i) must satisfy M[m][sigma(i)] == M[i][x].
                    const uint64_t* rm = row_m;
                    if (row_has(i, x)) {
                        uint64_t any = 0;
                        for (int ww = 0; ww < words; ++ww) { ci[ww] &= rm[ww]; any |= ci[ww]; }
                        dead = any == 0;
                    } else {
                        uint64_t any = 0;
                        for (int ww = 0; ww < words; ++ww) {
                            ci[ww] &= ~rm[ww];
                            if (ww == words - 1) ci[ww] &= full[ww];
                            any |= ci[ww];
                        }
                        dead = any == 0;
                    }
                }
                if (!dead && self(self, depth + 1)) return true;
                assigned[m] = 0;
                sigma[m] = -1;
                if (!exhausted) return false;
            }
        }
        return false;
    };

    bool found = search(search, 0);
    res.nodes_visited = nodes;
    if (found) {
        DualityMap map;
        map.sigma = sigma;
        map.verified = verify_duality(h, sigma);
        res.status = DualityStatus::Found;
        res.map = map;
    } else {
        res.status = exhausted ? DualityStatus::NotFound : DualityStatus::BudgetExceeded;
    }
    return res;
}

BipartiteGraph find_perfect_matching(const BipartiteGraph& h) {
    if (!h.balanced()) throw NoPerfectMatching("graph is not balanced");
    const int n = h.part_size();
    std::vector<std::vector<int32_t>> adj(n);
    for (int i = 0; i < n; ++i) adj[i] = h.row(i);

    std::vector<int32_t> match_b(n, -1);  // b-index -> a-index
    std::vector<int8_t> visited(n, 0);
    auto augment = [&](auto&& self, int a) -> bool {
        for (int32_t b : adj[a]) {
            if (visited[b]) continue;
            visited[b] = 1;
            if (match_b[b] == -1 || self(self, match_b[b])) {
                match_b[b] = a;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int a = 0; a < n; ++a) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(augment, a)) ++matched;
    }
    if (matched != n) throw NoPerfectMatching("maximum matching has size " +
                                              std::to_string(matched) + " < " + std::to_string(n));
    std::vector<int32_t> perm(n, -1);  // a-index -> b-index position in old ordering
    for (int b = 0; b < n; ++b) perm[match_b[b]] = b;
    return h.with_b_order(perm);
}

Graph matching_contraction(const BipartiteGraph& h) {
    if (!h.balanced()) throw NotAMatchingOrdering("graph is not balanced");
    const int n = h.part_size();
    for (int i = 0; i < n; ++i)
        if (!h.biadjacent(i, i))
            throw NotAMatchingOrdering("a_" + std::to_string(i + 1) + " b_" +
                                       std::to_string(i + 1) + " is not an edge");
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int i = 0; i < n; ++i)
        for (int32_t j : h.row(i))
            if (j != i) edges.emplace_back(i, j);
    Graph g = Graph::from_edges(n, std::move(edges));
    g.set_metadata({{"kind", "matching-contraction"}, {"n", std::to_string(n)}});
    return g;
}

Graph conduit_cycle(const BipartiteGraph& h, const std::vector<int32_t>& sigma, int tau) {
    if (tau % 2 == 0) throw TauParity("conduit cycle length must be odd, got " + std::to_string(tau));
    if (tau < 3) throw BadParameters("tau >= 3 required");
    if (!verify_duality(h, sigma)) throw DualityNotVerified("sigma is not a self-duality");
    const int n = h.part_size();
    std::vector<int32_t> sigma_inv(n);
    for (int i = 0; i < n; ++i) sigma_inv[sigma[i]] = i;

    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int part = 0; part < tau; ++part) {
        const int next = (part + 1) % tau;
        for (int i = 0; i < n; ++i)
            for (int32_t j : h.row(i))
                edges.emplace_back(part * n + i, next * n + sigma_inv[j]);
    }
    Graph g = Graph::from_edges(tau * n, std::move(edges));
    g.set_metadata({{"kind", "conduit-cycle"},
                    {"tau", std::to_string(tau)},
                    {"n", std::to_string(n)}});
    return g;
}

}  // namespace girthforge
