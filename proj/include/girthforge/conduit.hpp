#ifndef GIRTHFORGE_CONDUIT_HPP
#define GIRTHFORGE_CONDUIT_HPP

#include <optional>
#include <vector>

#include "girthforge/bipartite.hpp"
#include "girthforge/geometry.hpp"

namespace girthforge {

// Measured good-conduit report. pass holds iff the graph is balanced, regular, every
// cross-part pair is within tau, and (when a claim is given) the measured girth
// equals the claim.
struct ConduitReport {
    int claimed_tau = 0;
    std::optional<int> claimed_girth;
    int measured_cross_distance = -1;  // max over a in A, b in B; -1 if disconnected
    std::optional<int> measured_girth;
    int min_degree = 0;
    int max_degree = 0;
    int part_size = 0;
    bool balanced = false;
    bool regular = false;
    bool pass = false;
};

ConduitReport verify_conduit(const BipartiteGraph& h, int tau,
                             std::optional<int> claimed_girth = std::nullopt,
                             int threads = 1);

// sigma[i] = j means a_i maps to b_j; the induced part-swapping bijection is an
// automorphism of the whole graph when verified.
struct DualityMap {
    std::vector<int32_t> sigma;
    bool verified = false;
};

enum class DualityStatus { Found, NotFound, BudgetExceeded };

struct DualitySearchResult {
    DualityStatus status = DualityStatus::NotFound;
    std::optional<DualityMap> map;
    long long nodes_visited = 0;
};

// Backtracking search for a part-swapping automorphism (isomorphism of h onto its
// mirror), with per-candidate constraint propagation. NotFound requires exhausting
// the search space; BudgetExceeded is inconclusive.
DualitySearchResult find_self_duality(const BipartiteGraph& h,
                                      long long node_budget = 100000000LL);

// Independent check that sigma defines an adjacency-preserving part swap.
bool verify_duality(const BipartiteGraph& h, const std::vector<int32_t>& sigma);

// Reindexes the B side so that a_i b_i is an edge for every i (Prop-4 matching
// ordering). Augmenting-path maximum matching; throws NoPerfectMatching.
BipartiteGraph find_perfect_matching(const BipartiteGraph& h);

// mu(H): contract every matching edge a_i b_i; vertex i ~ j iff a_i ~ b_j or
// a_j ~ b_i in H (duplicates and loops dropped).
Graph matching_contraction(const BipartiteGraph& h);

// psi(H): tau copies of a self-dual conduit joined end-to-end in a cycle through
// sigma. Part j vertex i is adjacent to part j+1 vertex i' iff a_i ~ sigma(a_i').
// tau must be odd and >= 3; sigma must verify.
Graph conduit_cycle(const BipartiteGraph& h, const std::vector<int32_t>& sigma, int tau);

}  // namespace girthforge

#endif
