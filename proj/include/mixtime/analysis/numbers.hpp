#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace mixtime {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float;  // variable precision

// Scoped decimal-digit precision for Real.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.backend().data(), unsigned(n), unsigned(k));
    return out;
}

inline std::string rational_string(const Rational& r) {
    return r.str();  // "num/den" or plain integer
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace mixtime
