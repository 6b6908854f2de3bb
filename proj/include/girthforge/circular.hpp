#ifndef GIRTHFORGE_CIRCULAR_HPP
#define GIRTHFORGE_CIRCULAR_HPP

#include <vector>

#include "girthforge/conduit.hpp"
#include "girthforge/geometry.hpp"

namespace girthforge {

enum class Topology { Cycle, Path };
enum class Orientation { Forward, Mirrored };

// One hop of the circular construction: the template used between consecutive parts,
// acting on one tuple coordinate.
struct Hop {
    int coord = 0;
    Orientation orientation = Orientation::Forward;
};

// Ordered hop list over per-coordinate conduit templates. Parts count is hops.size()
// for a cycle and hops.size()+1 for a path. clique_parts designates the vertex union
// whose clique-in-power certificate the construction claims.
struct CircularSpec {
    Topology topology = Topology::Cycle;
    std::vector<Conduit> conduits;  // one per coordinate
    std::vector<Hop> hops;
    std::vector<int> clique_parts{0};

    int parts() const {
        return static_cast<int>(hops.size()) + (topology == Topology::Path ? 1 : 0);
    }
    // Intended power: sum of conduit tau over coordinates.
    int t() const;
};

struct BuiltCircular {
    Graph graph;
    int parts = 0;
    long long tuples_per_part = 0;
    int t = 0;
    int girth_floor = 0;
    std::vector<int> clique_parts;

    std::vector<int32_t> part_vertices(int part) const;
    std::vector<int32_t> clique_vertices() const;
};

// Validates role closure and parity computationally, then materializes the graph and
// the girth floor guaranteed by the construction (winding cycles >= parts; template
// cycles >= min gamma; winding-0 cycles bounded by the embedding separations).
// Throws SpecValidation / SelfDualityRequired / ResourceLimit.
BuiltCircular circular_construct(const CircularSpec& spec,
                                 long long vertex_budget = 50000000LL);

// Path-topology convenience (no wrap-around edges).
BuiltCircular path_construct(const CircularSpec& spec, long long vertex_budget = 50000000LL);

// Replaces each coordinate's single hop by `copies` interleaved embeddings (round-robin
// placement, alternating orientations). Requires copies in {3,5}, odd, copies <= tau of
// every conduit, and a verified self-duality on every conduit. The expected clique
// becomes the union of parts 0, lambda, 2*lambda, ...
CircularSpec unfold(const CircularSpec& spec, int copies);

// Interleaved placement without the self-duality requirement: same hop layout as
// unfold, claiming only the part-0 clique.
CircularSpec interleave_copies(const CircularSpec& spec, int copies);

}  // namespace girthforge

#endif
