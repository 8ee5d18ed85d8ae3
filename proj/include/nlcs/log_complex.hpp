#ifndef NLCS_LOG_COMPLEX_HPP
#define NLCS_LOG_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace nlcs {

// A complex number stored as (log-magnitude, phase). Factorial products
// like [e_n]! overflow double precision long before n reaches the
// truncation cap, so every series term is assembled in this form and
// exponentiated only after a common shift.
struct LogComplex {
    double log_mag = 0.0;  // log|z|; -inf encodes z == 0
    double phase = 0.0;

    static LogComplex one() { return {0.0, 0.0}; }

    static LogComplex zero() {
        return {-std::numeric_limits<double>::infinity(), 0.0};
    }

    static LogComplex from(std::complex<double> z) {
        if (z == std::complex<double>(0.0, 0.0)) return zero();
        return {std::log(std::abs(z)), std::arg(z)};
    }

    static LogComplex from_polar(double log_mag, double phase) {
        return {log_mag, phase};
    }

    bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        return std::polar(std::exp(log_mag), phase);
    }

    // value scaled by exp(-shift), for log-sum-exp style evaluation
    std::complex<double> value_shifted(double shift) const {
        if (is_zero()) return {0.0, 0.0};
        return std::polar(std::exp(log_mag - shift), phase);
    }

    LogComplex operator*(const LogComplex& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return {log_mag + o.log_mag, phase + o.phase};
    }

    LogComplex operator/(const LogComplex& o) const {
        if (is_zero()) return zero();
        return {log_mag - o.log_mag, phase - o.phase};
    }

    LogComplex conj() const { return {log_mag, -phase}; }

    // z + w without leaving log space: factor out the larger magnitude
    LogComplex operator+(const LogComplex& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const LogComplex& big = (log_mag >= o.log_mag) ? *this : o;
        const LogComplex& small = (log_mag >= o.log_mag) ? o : *this;
        std::complex<double> rest =
            std::complex<double>(1.0, 0.0) +
            std::polar(std::exp(small.log_mag - big.log_mag),
                       small.phase - big.phase);
        if (rest == std::complex<double>(0.0, 0.0)) return zero();
        return {big.log_mag + std::log(std::abs(rest)),
                big.phase + std::arg(rest)};
    }
};

}  // namespace nlcs

#endif
