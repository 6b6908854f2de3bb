#include "girthforge/bipartite.hpp"

#include <algorithm>

namespace girthforge {

BipartiteGraph::BipartiteGraph(Graph g, std::vector<int32_t> a_order,
                               std::vector<int32_t> b_order)
    : graph_(std::move(g)), a_order_(std::move(a_order)), b_order_(std::move(b_order)) {
    const int n = graph_.vertex_count();
    if (static_cast<int>(a_order_.size() + b_order_.size()) != n)
        throw BadParameters("orderings must partition the vertex set");
    std::vector<int8_t> seen(n, -1);
    for (int32_t v : a_order_) {
        if (v < 0 || v >= n || seen[v] != -1) throw BadParameters("bad A ordering");
        seen[v] = 0;
    }
    for (int32_t v : b_order_) {
        if (v < 0 || v >= n || seen[v] != -1) throw BadParameters("bad B ordering");
        seen[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int32_t v : graph_.neighbors(u))
            if (seen[u] == seen[v]) throw BadParameters("edge inside one part");
    index();
}

void BipartiteGraph::index() {
    const int n = graph_.vertex_count();
    side_of_.assign(n, 0);
    index_of_.assign(n, 0);
    for (size_t i = 0; i < a_order_.size(); ++i) {
        side_of_[a_order_[i]] = 0;
        index_of_[a_order_[i]] = static_cast<int32_t>(i);
    }
    for (size_t i = 0; i < b_order_.size(); ++i) {
        side_of_[b_order_[i]] = 1;
        index_of_[b_order_[i]] = static_cast<int32_t>(i);
    }
}

std::vector<int32_t> BipartiteGraph::row(int x) const {
    std::vector<int32_t> out;
    for (int32_t v : graph_.neighbors(a_order_[x])) out.push_back(index_of_[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int32_t> BipartiteGraph::col(int y) const {
    std::vector<int32_t> out;
    for (int32_t v : graph_.neighbors(b_order_[y])) out.push_back(index_of_[v]);
    std::sort(out.begin(), out.end());
    return out;
}

BipartiteGraph BipartiteGraph::with_b_order(const std::vector<int32_t>& new_b) const {
    if (new_b.size() != b_order_.size()) throw BadParameters("permutation size mismatch");
    std::vector<int32_t> b(new_b.size());
    std::vector<int8_t> used(new_b.size(), 0);
    for (size_t i = 0; i < new_b.size(); ++i) {
        int32_t j = new_b[i];
        if (j < 0 || j >= static_cast<int32_t>(new_b.size()) || used[j])
            throw BadParameters("not a permutation");
        used[j] = 1;
        b[i] = b_order_[j];
    }
    return BipartiteGraph(graph_, a_order_, b, true);
}

}  // namespace girthforge
