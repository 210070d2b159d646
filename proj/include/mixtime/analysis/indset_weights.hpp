#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixtime/analysis/numbers.hpp"

namespace mixtime {

// Contraction threshold f(m) = m-2 + m(m-1)/(2^m - 1 - m); the metric
// weights below admit gamma >= 0 exactly when f(m) >= max degree.
inline Rational f_threshold(int m) {
    if (m < 2) throw std::invalid_argument("edge size must be >= 2");
    Integer pow2 = Integer(1) << m;
    return Rational(m - 2) + Rational(Integer(m) * (m - 1), pow2 - 1 - m);
}

// Metric weights c_0..c_{m-2} for the independent-set chain, with the
// recurrence i*c_{i-1} - (m+1)*c_i + (m-i-1)*c_{i+1} = -gamma saturated at
// the largest feasible gamma. Sentinels: c_{-1} = c_0, c_{m-1} = max_deg+1.
struct IndSetWeights {
    int m = 0;
    int max_deg = 0;
    std::vector<Rational> c;  // c_0 .. c_{m-2}
    Rational gamma;
    bool no_contraction = false;  // gamma == 0 (f(m) == max_deg)

    Rational c_at(int i) const {  // sentinel-aware lookup
        if (i <= -1) return c.front();
        if (i >= m - 1) return Rational(max_deg + 1);
        return c[i];
    }
};

inline IndSetWeights indset_weights(int m, int max_deg) {
    if (m < 2 || max_deg < 1) throw std::invalid_argument("need m >= 2 and max degree >= 1");
    Rational f = f_threshold(m);
    if (f < max_deg)
        throw std::invalid_argument("no nonnegative gamma: f(" + std::to_string(m) + ") = " +
                                    rational_string(f) + " < " + std::to_string(max_deg));

    IndSetWeights w;
    w.m = m;
    w.max_deg = max_deg;
    Integer pow2 = Integer(1) << m;
    // Largest gamma allowed by the telescoped system.
    w.gamma = Rational(pow2 - 1 - m, Integer(m - 2) * (pow2 / 2) + 1) * (f - max_deg);
    w.no_contraction = (w.gamma == 0);

    Rational kappa_num = (Rational(m - max_deg - 2) + w.gamma) / m;
    Rational sum_small = 0, sum_big = 0;  // running sums of C(m-1,j), C(m,j)
    w.c.resize(m - 1);
    for (int i = 0; i <= m - 2; ++i) {
        sum_small += Rational(binomial(m - 1, i));
        sum_big += Rational(binomial(m, i));
        w.c[i] = (w.gamma * sum_small - kappa_num * sum_big) / Rational(binomial(m - 1, i));
    }
    return w;
}

struct WeightCheckReport {
    std::vector<Rational> residuals;  // recurrence left side + gamma, per i
    bool equations_ok = true;
    bool monotone_ok = true;
    bool positive_ok = true;
    std::vector<std::string> violations;

    bool ok() const { return equations_ok && monotone_ok && positive_ok; }
};

// Exact check of the recurrence (equality at -gamma), monotonicity and
// positivity. c_{m-1} = max_deg+1 enters the last equation.
inline WeightCheckReport verify_indset_recurrence(const IndSetWeights& w) {
    WeightCheckReport rep;
    for (int i = 0; i <= w.m - 2; ++i) {
        Rational lhs = Rational(i) * w.c_at(i - 1) - Rational(w.m + 1) * w.c_at(i) +
                       Rational(w.m - i - 1) * w.c_at(i + 1);
        Rational res = lhs + w.gamma;
        rep.residuals.push_back(res);
        if (res != 0) {
            rep.equations_ok = false;
            rep.violations.push_back("equation i=" + std::to_string(i) + " residual " +
                                     rational_string(res));
        }
    }
    if (w.c.empty() || w.c.back() != 1) {
        rep.equations_ok = false;
        rep.violations.push_back("c_{m-2} != 1");
    }
    for (int i = 0; i + 1 <= w.m - 2; ++i) {
        bool bad = w.m >= 3 ? !(w.c[i] < w.c[i + 1]) : !(w.c[i] <= w.c[i + 1]);
        if (bad) {
            rep.monotone_ok = false;
            rep.violations.push_back("monotonicity fails at i=" + std::to_string(i));
        }
    }
    for (int i = 0; i <= w.m - 2; ++i)
        if (!(w.c[i] > 0)) {
            rep.positive_ok = false;
            rep.violations.push_back("c_" + std::to_string(i) + " not positive");
        }
    return rep;
}

// Mixing bound for the independent-set chain:
//   tau(eps) <= (2n/gamma) * ln(max_deg * n / (c_0 * eps)).
inline Rational indset_mixing_prefactor(const IndSetWeights& w, long n) {
    if (!(w.gamma > 0)) throw std::invalid_argument("prefactor needs gamma > 0");
    return Rational(2 * n) / w.gamma;
}

inline double indset_mixing_bound(int m, int max_deg, long n, double eps) {
    if (f_threshold(m) <= max_deg)
        throw std::invalid_argument("no contraction: f(m) <= max degree");
    IndSetWeights w = indset_weights(m, max_deg);
    double pref = to_double(indset_mixing_prefactor(w, n));
    return pref * std::log(double(max_deg) * double(n) / (to_double(w.c.front()) * eps));
}

}  // namespace mixtime
