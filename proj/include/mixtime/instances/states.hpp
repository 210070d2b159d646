#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mixtime/instances/bipartite_graph.hpp"
#include "mixtime/instances/hypergraph.hpp"

namespace mixtime {

// Vertex-membership state for the independent-set chain.
class OccupancyState {
public:
    explicit OccupancyState(int vertex_count) : in_(vertex_count + 1, 0) {}

    int vertex_count() const { return int(in_.size()) - 1; }
    bool contains(int v) const { return in_[v] != 0; }
    void insert(int v) { in_[v] = 1; }
    void erase(int v) { in_[v] = 0; }

    int size() const {
        int s = 0;
        for (int v = 1; v <= vertex_count(); ++v) s += in_[v];
        return s;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int v = 1; v <= vertex_count(); ++v)
            if (in_[v]) out.push_back(v);
        return out;
    }

    bool operator==(const OccupancyState& o) const { return in_ == o.in_; }
    bool operator!=(const OccupancyState& o) const { return in_ != o.in_; }
    bool operator<(const OccupancyState& o) const { return in_ < o.in_; }

private:
    std::vector<std::uint8_t> in_;
};

// No edge fully contained in the occupied set.
inline bool is_independent(const Hypergraph& h, const OccupancyState& s) {
    for (const auto& e : h.edges()) {
        bool full = true;
        for (int v : e)
            if (!s.contains(v)) { full = false; break; }
        if (full) return false;
    }
    return true;
}

// Would s + {v} be independent? Only edges through v need checking.
inline bool insertion_independent(const Hypergraph& h, const OccupancyState& s, int v) {
    for (int j : h.incident_edges(v)) {
        bool full = true;
        for (int u : h.edge(j))
            if (u != v && !s.contains(u)) { full = false; break; }
        if (full) return false;
    }
    return true;
}

// Colour assignment with palette 1..q; shared by the hypergraph-colouring
// and bipartite chains.
class ColouringState {
public:
    ColouringState(int vertex_count, int palette)
        : q_(palette), colour_(vertex_count + 1, 1) {
        if (palette < 1 || palette > 255) throw std::invalid_argument("palette size out of range");
    }

    int vertex_count() const { return int(colour_.size()) - 1; }
    int palette() const { return q_; }
    int colour(int v) const { return colour_[v]; }
    void set_colour(int v, int c) { colour_[v] = std::uint8_t(c); }

    bool operator==(const ColouringState& o) const { return q_ == o.q_ && colour_ == o.colour_; }
    bool operator!=(const ColouringState& o) const { return !(*this == o); }
    bool operator<(const ColouringState& o) const { return colour_ < o.colour_; }

private:
    int q_;
    std::vector<std::uint8_t> colour_;
};

// Hypergraph properness: no edge monochromatic.
inline bool is_proper(const Hypergraph& h, const ColouringState& s) {
    for (const auto& e : h.edges()) {
        bool mono = true;
        for (int v : e)
            if (s.colour(v) != s.colour(e.front())) { mono = false; break; }
        if (mono) return false;
    }
    return true;
}

// Graph properness: no edge with equal endpoint colours.
inline bool is_proper(const BipartiteGraph& g, const ColouringState& s) {
    for (auto [u, v] : g.edges())
        if (s.colour(u) == s.colour(g.left_size() + v)) return false;
    return true;
}

// Would recolouring v to c keep the hypergraph colouring proper?
inline bool recolour_proper(const Hypergraph& h, const ColouringState& s, int v, int c) {
    for (int j : h.incident_edges(v)) {
        bool mono = true;
        for (int u : h.edge(j))
            if (u != v && s.colour(u) != c) { mono = false; break; }
        if (mono) return false;
    }
    return true;
}

}  // namespace mixtime
