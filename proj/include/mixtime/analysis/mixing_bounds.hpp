#pragma once

#include <cmath>
#include <stdexcept>

namespace mixtime {

// Inputs for the stopping-time mixing bounds: within every k steps the
// stopping time arrives with probability >= p, the distance ratio at the
// stopping time is bounded by alpha, D is the metric diameter.
struct MixingBoundInputs {
    long k = 1;            // stopping-time window
    double p = 1.0;        // arrival probability within the window
    double alpha = 0.0;    // contraction at the stopping time
    double diameter = 1.0; // metric diameter D
    double eps = 0.01;     // target total-variation distance
    double gamma_general = 0.0;  // extra-distance allowance, general bound only

    void validate() const {
        if (k < 1 || !(p > 0) || p > 1 || alpha < 0 || alpha >= 1 || !(diameter > 0) ||
            !(eps > 0) || eps >= 1 || gamma_general < 0)
            throw std::invalid_argument("mixing bound inputs out of range");
    }
};

// tau(eps) <= (k / (p(1-alpha))) * ln(e D / (eps (1-alpha)))
inline double mixing_bound_onestop(const MixingBoundInputs& in) {
    in.validate();
    double om = 1 - in.alpha;
    return double(in.k) / (in.p * om) * std::log(std::exp(1.0) * in.diameter / (in.eps * om));
}

// tau(eps) <= (k (2-alpha) / (p(1-alpha))) * ln(2 e D / eps); the 1/(1-alpha)
// moves out of the logarithm.
inline double mixing_bound_twophase(const MixingBoundInputs& in) {
    in.validate();
    double om = 1 - in.alpha;
    return double(in.k) * (2 - in.alpha) / (in.p * om) *
           std::log(2 * std::exp(1.0) * in.diameter / in.eps);
}

// General stopping-time bound with leading constant 1 (stated only up to a
// hidden constant; outputs are labelled accordingly by callers).
inline double mixing_bound_general(const MixingBoundInputs& in) {
    in.validate();
    double om = 1 - in.alpha;
    return double(in.k) * (om + in.gamma_general) / (in.p * om) *
           std::log(in.diameter / in.eps);
}

}  // namespace mixtime
