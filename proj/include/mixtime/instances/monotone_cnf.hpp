#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mixtime/instances/hypergraph.hpp"

namespace mixtime {

// Monotone CNF: clauses of positive literals only. Satisfying assignments
// correspond to complements of hypergraph independent sets, so counts agree
// with the associated hypergraph.
class MonotoneCnf {
public:
    MonotoneCnf(int variable_count, std::vector<std::vector<int>> clause_list)
        : n_(variable_count), clauses_(std::move(clause_list)) {
        if (n_ <= 0) throw std::invalid_argument("variable count must be positive");
        for (auto& c : clauses_) {
            if (c.empty()) throw std::invalid_argument("empty clause");
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            if (c.front() < 1 || c.back() > n_)
                throw std::invalid_argument("variable id out of range");
        }
        auto sorted = clauses_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate clause");
    }

    int variable_count() const { return n_; }
    const std::vector<std::vector<int>>& clauses() const { return clauses_; }

private:
    int n_;
    std::vector<std::vector<int>> clauses_;
};

// One clause per edge, literals = edge vertices.
inline MonotoneCnf to_monotone_cnf(const Hypergraph& h) {
    return MonotoneCnf(h.vertex_count(), h.edges());
}

inline Hypergraph from_monotone_cnf(const MonotoneCnf& f) {
    for (const auto& c : f.clauses())
        if (c.size() < 2) throw std::invalid_argument("clause of size < 2 has no hypergraph edge");
    return Hypergraph(f.variable_count(), f.clauses());
}

}  // namespace mixtime
