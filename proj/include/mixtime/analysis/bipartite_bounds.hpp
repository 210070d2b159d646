#pragma once

#include <stdexcept>
#include <string>

#include "mixtime/analysis/numbers.hpp"

namespace mixtime {

// The change-vertex bound alpha'_v is printed with numerator
// (q - alpha_v)(alpha_v); the analogous non-v formula suggests
// (q - alpha_v - 1)(alpha_v - 1). Both readings are implemented; the printed
// one is the default. Neither reproduces every tabulated threshold (see the
// min_q tests), so the discrepancy is surfaced rather than resolved.
enum class AlphaPrimeVVariant { printed, symmetric };

struct BipartiteBounds {
    int q = 0;
    int max_deg = 0;
    unsigned digits = 50;
    AlphaPrimeVVariant variant = AlphaPrimeVVariant::printed;
    Real alpha, alpha_prime, alpha_v, alpha_prime_v;
    Real B;                  // (max_deg - 1) * alpha' + alpha'_v
    Real contraction_factor; // B(B+1)/2, full-step bound

    bool contracts() const { return B < 1; }
};

// Expected-available-colour bounds for the bipartite recolouring chains:
//   alpha   = 1 + (q-2)(1 - 1/(q-D))^((D-1)(q-D)/(q-2))
//   alpha'  = (1/alpha)(1 + (q-alpha-1)(alpha-1)/((q-D)(q-2)alpha))
//   alpha_v = (q-1)(1 - 1/(q-D))^((D-1)(q-D)/(q-1))
// with alpha'_v per the selected reading.
inline BipartiteBounds bip_bounds(int q, int max_deg, unsigned digits = 50,
                                  AlphaPrimeVVariant variant = AlphaPrimeVVariant::printed) {
    if (q <= max_deg + 1) throw std::invalid_argument("need q >= max degree + 2");
    if (digits < 50) digits = 50;
    PrecisionGuard guard(digits + 10);

    BipartiteBounds b;
    b.q = q;
    b.max_deg = max_deg;
    b.digits = digits;
    b.variant = variant;

    Real Q(q), D(max_deg);
    Real base = 1 - 1 / (Q - D);
    b.alpha = 1 + (Q - 2) * pow(base, (D - 1) * (Q - D) / (Q - 2));
    b.alpha_prime =
        (1 / b.alpha) * (1 + (Q - b.alpha - 1) * (b.alpha - 1) / ((Q - D) * (Q - 2) * b.alpha));
    b.alpha_v = (Q - 1) * pow(base, (D - 1) * (Q - D) / (Q - 1));
    if (variant == AlphaPrimeVVariant::printed)
        b.alpha_prime_v =
            (1 / b.alpha_v) * (1 + (Q - b.alpha_v) * b.alpha_v / ((Q - D) * (Q - 1) * b.alpha_v));
    else
        b.alpha_prime_v = (1 / b.alpha_v) *
                          (1 + (Q - b.alpha_v - 1) * (b.alpha_v - 1) / ((Q - D) * (Q - 1) * b.alpha_v));
    b.B = (D - 1) * b.alpha_prime + b.alpha_prime_v;
    b.contraction_factor = b.B * (b.B + 1) / 2;
    return b;
}

// Smallest q in [max_deg+2, 3*max_deg+2] with B(q) < 1; 0 if none contracts
// in that range. Evaluations near the boundary are re-done at doubled
// precision before the verdict is trusted.
inline int min_q_for_contraction(int max_deg, unsigned digits = 50,
                                 AlphaPrimeVVariant variant = AlphaPrimeVVariant::printed) {
    if (max_deg < 2) throw std::invalid_argument("need max degree >= 2");
    for (int q = max_deg + 2; q <= 3 * max_deg + 2; ++q) {
        BipartiteBounds b = bip_bounds(q, max_deg, digits, variant);
        {
            PrecisionGuard guard(digits + 10);
            Real gap = b.B - 1;
            if (gap < 0) gap = -gap;
            if (gap < pow(Real(10), -int(digits) + 10))
                b = bip_bounds(q, max_deg, digits * 2, variant);
        }
        if (b.contracts()) return q;
    }
    return 0;
}

// Root of (1/beta) e^(1/beta) = 1 by bisection on [1.5, 2.0].
inline Real solve_beta(unsigned digits = 30) {
    if (digits < 10) digits = 10;
    PrecisionGuard guard(digits + 10);
    Real lo = Real(3) / 2, hi = 2;
    Real tol = pow(Real(10), -int(digits) - 2);
    // g(beta) = (1/beta) e^(1/beta) - 1 is decreasing on the bracket.
    auto g = [](const Real& x) { return exp(1 / x) / x - 1; };
    while (hi - lo > tol) {
        Real mid = (lo + hi) / 2;
        if (g(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace mixtime
