#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixtime/analysis/numbers.hpp"

namespace mixtime {

// Metric weights for the 3-uniform hypergraph colouring chain. Edge classes
// through the change vertex (coloured 1 in X, 2 in Y; e\{w} colours shown):
//   E_1: {1,2}   E_2: {1,i} or {2,i}   E_3: {i,i}   E_4: {i,j}   (2 < i < j)
// with weights c_1 = 1 >= c_2 >= c_3 = c_4 > 0 and sentinel c_0 = max_deg+1.
struct TriColWeights {
    int q = 0;
    int max_deg = 0;
    Rational c1, c2, c3, c4;
    Rational gamma;
    bool no_contraction = false;  // gamma < 0: no contraction at this (q, max_deg)

    Rational c0() const { return Rational(max_deg + 1); }
    Rational weight(int cls) const {
        switch (cls) {
            case 1: return c1;
            case 2: return c2;
            case 3: return c3;
            case 4: return c4;
        }
        throw std::invalid_argument("edge class must be 1..4");
    }
};

inline TriColWeights tricol_weights(int q, int max_deg) {
    if (q <= max_deg + 1)
        throw std::invalid_argument("chain not ergodic: need q > max degree + 1");
    TriColWeights w;
    w.q = q;
    w.max_deg = max_deg;
    Rational den(2 * q - max_deg + 1);
    w.c1 = 1;
    w.c2 = Rational(2 * q - 2 * max_deg + 1) / den;
    w.c3 = Rational(2 * q - 3 * max_deg + 1) / den;
    w.c4 = w.c3;
    w.gamma = Rational(Integer(2) * q * q - Integer(q) * (3 * max_deg - 1) - 4 * max_deg) / den;
    w.no_contraction = (w.gamma < 0);
    return w;
}

struct TriColCheckReport {
    std::vector<Rational> residuals;  // four equations, lhs - gamma
    bool equations_ok = true;
    bool range_ok = true;  // 1 = c1 >= c2 >= c3 = c4 > 0
    std::vector<std::string> violations;

    bool ok() const { return equations_ok && range_ok; }
};

// Exact check of the four-equation system in its |E_3| = 0 form, with
// c_0 = max_deg+1 and c_1 = 1.
inline TriColCheckReport verify_tricol_system(const TriColWeights& w) {
    TriColCheckReport rep;
    Rational q(w.q), D(w.max_deg);
    Rational c0 = w.c0(), c1 = w.c1, c2 = w.c2, c3 = w.c3, c4 = w.c4;
    std::vector<Rational> lhs = {
        2 * (q - D - 1) * (c1 - c2) - 2 * (c0 - c1) + c1 * q,
        (q - D - 2) * (c2 - c4) + (c2 - c3) - (c0 - c2) - (c1 - c2) + c2 * q,
        2 * (q - D - 2) * (c3 - c4) - 4 * (c2 - c3) + c3 * q,
        -2 * (c3 - c4) - 4 * (c2 - c4) + c4 * q,
    };
    for (int i = 0; i < 4; ++i) {
        Rational res = lhs[i] - w.gamma;
        rep.residuals.push_back(res);
        if (res != 0) {
            rep.equations_ok = false;
            rep.violations.push_back("equation " + std::to_string(i + 1) + " residual " +
                                     rational_string(res));
        }
    }
    bool range = (c1 == 1) && (c1 >= c2) && (c2 >= c3) && (c3 == c4) && (c4 > 0);
    if (!range) {
        rep.range_ok = false;
        rep.violations.push_back("weight ordering 1 = c1 >= c2 >= c3 = c4 > 0 fails");
    }
    return rep;
}

// Smallest q with gamma >= 0 is ceil(3*max_deg/2) + 1.
inline int tricol_min_q(int max_deg) { return (3 * max_deg + 1) / 2 + 1; }

// Mixing bound: tau(eps) <= prefactor * n * ln(max_deg * n / eps), where
// prefactor = (2q^2 - q*max_deg + q) / (2q^2 - q(3*max_deg - 1) - 4*max_deg).
inline Rational tricol_mixing_prefactor(int q, int max_deg) {
    Integer num = Integer(2) * q * q - Integer(q) * max_deg + q;
    Integer den = Integer(2) * q * q - Integer(q) * (3 * max_deg - 1) - 4 * max_deg;
    if (den <= 0) throw std::invalid_argument("no contraction: gamma <= 0");
    return Rational(num, den);
}

inline double tricol_mixing_bound(int q, int max_deg, long n, double eps) {
    double pref = to_double(tricol_mixing_prefactor(q, max_deg));
    return pref * double(n) * std::log(double(max_deg) * double(n) / eps);
}

}  // namespace mixtime
