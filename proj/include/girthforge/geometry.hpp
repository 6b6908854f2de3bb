#ifndef GIRTHFORGE_GEOMETRY_HPP
#define GIRTHFORGE_GEOMETRY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "girthforge/bipartite.hpp"
#include "girthforge/field.hpp"

namespace girthforge {

// Point-line incidence structure over GF(q). Points and lines are normalized
// homogeneous coordinate tuples (first nonzero coordinate 1); lines are stored as
// row-reduced 2-space bases (projective planes use dual coordinates instead).
// Vertex ids: points 0..n-1 then lines n..2n-1, each side sorted lexicographically
// by its coordinates.
struct IncidenceModel {
    std::string kind;
    int order = 0;                                // q, or delta for complete bipartite
    std::vector<std::vector<int>> points;
    std::vector<std::vector<std::vector<int>>> lines;  // basis rows (or one dual row)
    BipartiteGraph graph;
};

// Incidence graph of PG(2,q): 1-spaces vs 2-spaces of GF(q)^3, incidence by
// containment. (q+1)-regular, per part q^2+q+1, girth 6.
IncidenceModel projective_plane_incidence(int q);

// Symplectic quadrangle W(q): all points of PG(3,q) vs lines totally isotropic under
// <x,y> = x0 y1 - x1 y0 + x2 y3 - x3 y2. (q+1)-regular, per part q^3+q^2+q+1, girth 8.
IncidenceModel symplectic_quadrangle_incidence(int q);

// Split Cayley hexagon of order (q,q), realized in the split octonions: points are
// projective trace-zero octonions of norm zero (the parabolic quadric), lines are the
// 2-spaces on which the octonion product vanishes identically. Point labels use the
// quadric coordinates x0 x4 + x1 x5 + x2 x6 = x3^2. (q+1)-regular, per part
// (q^6-1)/(q-1), girth 12.
IncidenceModel split_cayley_hexagon_incidence(int q);

// K_{delta,delta} with canonical orderings.
IncidenceModel complete_bipartite_conduit(int delta);

// A conduit template: the bipartite graph together with its claimed parameters and,
// once found, a verified self-duality.
struct Conduit {
    std::string kind;
    int q = 0;      // order parameter (delta for complete bipartite)
    int tau = 0;    // cross-part distance bound
    int gamma = 0;  // girth
    BipartiteGraph graph;
    std::optional<std::vector<int32_t>> sigma;

    int degree() const { return graph.part_size() ? graph.graph().degree(graph.a_order()[0]) : 0; }
};

// kind in {"pp", "sq", "hex", "kdd"} (or the long names above).
Conduit make_conduit(const std::string& kind, int q);

// ---- split octonion arithmetic (exposed for tests) ----
// Coordinates: (a, v1, v2, v3, w1, w2, w3, b); norm ab - v.w; trace a + b.
using Octonion = std::array<int, 8>;
Octonion octonion_mul(const Field& f, const Octonion& x, const Octonion& y);
int octonion_norm(const Field& f, const Octonion& x);

}  // namespace girthforge

#endif
