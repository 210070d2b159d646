#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixtime {

// Hypergraph on vertices 1..n. Edges are kept as strictly increasing vertex
// lists; incidence lists, max degree and minimum edge size are cached at
// construction.
class Hypergraph {
public:
    Hypergraph(int vertex_count, std::vector<std::vector<int>> edge_list)
        : n_(vertex_count), edges_(std::move(edge_list)) {
        if (n_ <= 0) throw std::invalid_argument("vertex count must be positive");
        for (auto& e : edges_) {
            if (e.size() < 2) throw std::invalid_argument("edge with fewer than 2 vertices");
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("duplicate vertex within edge");
            if (e.front() < 1 || e.back() > n_)
                throw std::invalid_argument("vertex id out of range");
        }
        auto sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate edge");

        incident_.assign(n_ + 1, {});
        min_edge_size_ = edges_.empty() ? 0 : int(edges_.front().size());
        uniform_ = true;
        for (int j = 0; j < int(edges_.size()); ++j) {
            const auto& e = edges_[j];
            if (int(e.size()) != min_edge_size_) uniform_ = false;
            min_edge_size_ = std::min(min_edge_size_, int(e.size()));
            for (int v : e) incident_[v].push_back(j);
        }
        max_degree_ = 0;
        for (int v = 1; v <= n_; ++v)
            max_degree_ = std::max(max_degree_, int(incident_[v].size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int j) const { return edges_[j]; }
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
    int degree(int v) const { return int(incident_[v].size()); }
    int max_degree() const { return max_degree_; }
    int min_edge_size() const { return min_edge_size_; }
    bool uniform_edge_size() const { return uniform_; }

private:
    int n_;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incident_;
    int max_degree_ = 0;
    int min_edge_size_ = 0;
    bool uniform_ = true;
};

}  // namespace mixtime
