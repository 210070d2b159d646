#pragma once

#include <boost/math/distributions/chi_squared.hpp>
#include <stdexcept>
#include <vector>

namespace mixtime {

inline double chi_square_pvalue(double statistic, int dof) {
    if (dof < 1) throw std::invalid_argument("degrees of freedom must be positive");
    if (statistic <= 0) return 1.0;
    boost::math::chi_squared_distribution<double> dist{double(dof)};
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

// Pearson statistic of observed counts against expected probabilities given as
// exact counts over a common denominator; zero-probability cells must be empty.
struct ChiSquareTest {
    double statistic = 0;
    int dof = 0;
    double pvalue = 1;
};

inline ChiSquareTest chi_square_counts(const std::vector<long>& observed,
                                       const std::vector<long>& expected_counts,
                                       long expected_denominator) {
    if (observed.size() != expected_counts.size())
        throw std::invalid_argument("cell count mismatch");
    long total = 0;
    for (long o : observed) total += o;
    ChiSquareTest t;
    for (size_t i = 0; i < observed.size(); ++i) {
        if (expected_counts[i] == 0) {
            if (observed[i] != 0) throw std::invalid_argument("observation in a null cell");
            continue;
        }
        double e = double(total) * double(expected_counts[i]) / double(expected_denominator);
        double diff = double(observed[i]) - e;
        t.statistic += diff * diff / e;
        t.dof += 1;
    }
    t.dof -= 1;
    if (t.dof < 1) throw std::invalid_argument("need at least two supported cells");
    t.pvalue = chi_square_pvalue(t.statistic, t.dof);
    return t;
}

}  // namespace mixtime
