#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mixtime {

// Bipartite graph with parts of sizes n1, n2. Vertices carry global ids:
// left part 1..n1, right part n1+1..n1+n2. Edges are stored as (left, right)
// pairs in local ids; adjacency lists use global ids.
class BipartiteGraph {
public:
    BipartiteGraph(int n1, int n2, std::vector<std::pair<int, int>> edge_list)
        : n1_(n1), n2_(n2), edges_(std::move(edge_list)) {
        if (n1_ <= 0 || n2_ <= 0) throw std::invalid_argument("part sizes must be positive");
        for (auto [u, v] : edges_) {
            if (u < 1 || u > n1_) throw std::invalid_argument("left id out of range");
            if (v < 1 || v > n2_) throw std::invalid_argument("right id out of range");
        }
        auto sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate edge");

        adj_.assign(n1_ + n2_ + 1, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(n1_ + v);
            adj_[n1_ + v].push_back(u);
        }
        max_degree_ = 0;
        for (int v = 1; v <= n1_ + n2_; ++v) {
            std::sort(adj_[v].begin(), adj_[v].end());
            max_degree_ = std::max(max_degree_, int(adj_[v].size()));
        }
    }

    int left_size() const { return n1_; }
    int right_size() const { return n2_; }
    int vertex_count() const { return n1_ + n2_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    int max_degree() const { return max_degree_; }
    bool is_left(int v) const { return v <= n1_; }

    // Vertices of one side, in ascending id order. side: 1 = left, 2 = right.
    std::vector<int> side_vertices(int side) const {
        std::vector<int> out;
        if (side == 1)
            for (int v = 1; v <= n1_; ++v) out.push_back(v);
        else
            for (int v = n1_ + 1; v <= n1_ + n2_; ++v) out.push_back(v);
        return out;
    }

private:
    int n1_, n2_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    int max_degree_ = 0;
};

}  // namespace mixtime
