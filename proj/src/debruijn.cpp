#include "girthforge/debruijn.hpp"

#include <numeric>

namespace girthforge {

namespace {

long long checked_pow(long long base, int exp, long long budget) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > budget) throw ResourceLimit("tuple space exceeds vertex budget");
    }
    return r;
}

}  // namespace

std::vector<int32_t> BuiltParts::part_vertices(int part) const {
    std::vector<int32_t> out(static_cast<size_t>(tuples_per_part));
    std::iota(out.begin(), out.end(), static_cast<int32_t>(part * tuples_per_part));
    return out;
}

Graph debruijn_graph(int t, int k, long long vertex_budget) {
    if (t < 1 || k < 1) throw BadParameters("t >= 1 and k >= 1 required");
    const long long n = checked_pow(k, t, vertex_budget);
    const long long high = n / k;  // value of the leading symbol position
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (long long u = 0; u < n; ++u) {
        // Left shift: drop the leading symbol, append any new one.
        const long long shifted = (u % high) * k;
        for (int s = 0; s < k; ++s) edges.emplace_back(static_cast<int32_t>(u),
                                                       static_cast<int32_t>(shifted + s));
    }
    Graph g = Graph::from_edges(static_cast<int>(n), std::move(edges));
    g.set_metadata({{"kind", "debruijn"},
                    {"t", std::to_string(t)},
                    {"k", std::to_string(k)}});
    return g;
}

BuiltParts debruijn_circular(int t, int d, long long vertex_budget) {
    if (t < 2 || d < 2 || d % 2 != 0) throw BadParameters("t >= 2 and even d >= 2 required");
    const int k = d / 2;
    const long long tuples = checked_pow(k, t, vertex_budget);
    if (tuples * t > vertex_budget) throw ResourceLimit("vertex budget exceeded");
    const long long high = tuples / k;
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int part = 0; part < t; ++part) {
        const long long lb = part * tuples, rb = ((part + 1) % t) * tuples;
        for (long long x = 0; x < tuples; ++x) {
            const long long shifted = (x % high) * k;
            for (int s = 0; s < k; ++s)
                edges.emplace_back(static_cast<int32_t>(lb + x),
                                   static_cast<int32_t>(rb + shifted + s));
        }
    }
    BuiltParts out;
    out.graph = Graph::from_edges(static_cast<int>(tuples * t), std::move(edges));
    out.parts = t;
    out.tuples_per_part = tuples;
    out.graph.set_metadata({{"kind", "debruijn-circular"},
                            {"t", std::to_string(t)},
                            {"d", std::to_string(d)},
                            {"parts", std::to_string(t)},
                            {"tuples_per_part", std::to_string(tuples)}});
    return out;
}

BuiltParts hamming_circular(int t, int d, long long vertex_budget) {
    if (t < 2 || d < 2 || d % 2 != 0) throw BadParameters("t >= 2 and even d >= 2 required");
    const int k = d / 2;
    const long long tuples = checked_pow(k, t, vertex_budget);
    if (tuples * t > vertex_budget) throw ResourceLimit("vertex budget exceeded");
    std::vector<long long> stride(t, 1);
    for (int c = t - 2; c >= 0; --c) stride[c] = stride[c + 1] * k;
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int part = 0; part < t; ++part) {
        const long long lb = part * tuples, rb = ((part + 1) % t) * tuples;
        const long long st = stride[part];  // hop i rewrites coordinate i
        for (long long x = 0; x < tuples; ++x) {
            const int digit = static_cast<int>((x / st) % k);
            const long long base = x - digit * st;
            for (int s = 0; s < k; ++s)
                edges.emplace_back(static_cast<int32_t>(lb + x),
                                   static_cast<int32_t>(rb + base + s * st));
        }
    }
    BuiltParts out;
    out.graph = Graph::from_edges(static_cast<int>(tuples * t), std::move(edges));
    out.parts = t;
    out.tuples_per_part = tuples;
    out.graph.set_metadata({{"kind", "hamming-circular"},
                            {"t", std::to_string(t)},
                            {"d", std::to_string(d)},
                            {"parts", std::to_string(t)},
                            {"tuples_per_part", std::to_string(tuples)}});
    return out;
}

}  // namespace girthforge
