#ifndef GIRTHFORGE_DEBRUIJN_HPP
#define GIRTHFORGE_DEBRUIJN_HPP

#include "girthforge/graph.hpp"

namespace girthforge {

// Undirected loopless De Bruijn graph: vertices are words of length t over an
// alphabet of size k; u ~ v iff one is a one-symbol shift of the other.
Graph debruijn_graph(int t, int k, long long vertex_budget = 50000000LL);

struct BuiltParts {
    Graph graph;
    int parts = 0;
    long long tuples_per_part = 0;

    std::vector<int32_t> part_vertices(int part) const;
};

// De Bruijn-type circular construction (G1): t parts of (d/2)^t tuples; hop i joins
// x in U^(i) to y in U^(i+1 mod t) iff y is a left shift of x (last symbol free).
BuiltParts debruijn_circular(int t, int d, long long vertex_budget = 50000000LL);

// Hamming-type circular construction (G2): hop i rewrites coordinate i freely.
BuiltParts hamming_circular(int t, int d, long long vertex_budget = 50000000LL);

}  // namespace girthforge

#endif
