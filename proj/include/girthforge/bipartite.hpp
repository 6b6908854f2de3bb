#ifndef GIRTHFORGE_BIPARTITE_HPP
#define GIRTHFORGE_BIPARTITE_HPP

#include <optional>
#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

// A graph together with a part assignment A/B and index orderings
// A = (a_1..a_n), B = (b_1..b_n). Balanced means |A| == |B|.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    // Validates that every edge joins A to B and the orderings partition V.
    BipartiteGraph(Graph g, std::vector<int32_t> a_order, std::vector<int32_t> b_order);

    const Graph& graph() const { return graph_; }
    const std::vector<int32_t>& a_order() const { return a_order_; }
    const std::vector<int32_t>& b_order() const { return b_order_; }
    bool balanced() const { return a_order_.size() == b_order_.size(); }
    int part_size() const { return static_cast<int>(a_order_.size()); }

    // a-index x adjacent to b-index y?
    bool biadjacent(int x, int y) const { return graph_.adjacent(a_order_[x], b_order_[y]); }
    // b-indices adjacent to a-index x, ascending.
    std::vector<int32_t> row(int x) const;
    // a-indices adjacent to b-index y, ascending.
    std::vector<int32_t> col(int y) const;

    // Same abstract graph with the roles of the A- and B-orderings swapped (-H).
    BipartiteGraph mirror() const { return BipartiteGraph(graph_, b_order_, a_order_, true); }

    // Reorders the B side by the permutation new_b (b'_i = b_order[new_b[i]]).
    BipartiteGraph with_b_order(const std::vector<int32_t>& new_b) const;

private:
    BipartiteGraph(Graph g, std::vector<int32_t> a, std::vector<int32_t> b, bool /*unchecked*/)
        : graph_(std::move(g)), a_order_(std::move(a)), b_order_(std::move(b)) { index(); }
    void index();

    Graph graph_;
    std::vector<int32_t> a_order_, b_order_;
    std::vector<int32_t> side_of_;   // 0 = A, 1 = B per vertex
    std::vector<int32_t> index_of_;  // position within its ordering
public:
    int side_of(int v) const { return side_of_[v]; }
    int index_of(int v) const { return index_of_[v]; }
};

}  // namespace girthforge

#endif
