#ifndef NLCS_NONCLASSICALITY_HPP
#define NLCS_NONCLASSICALITY_HPP

#include <complex>
#include <string>

#include "nlcs/states.hpp"

namespace nlcs {

/// The moments every criterion derives from. Conjugate moments
/// (<a+>, <a+^2>, <a+^4>, <a^2 a+^2> partner) follow by conjugation.
struct MomentSet {
    enum class Source { ClosedForm, Oracle };

    std::complex<double> a;    // <a>
    std::complex<double> a2;   // <a^2>
    std::complex<double> a4;   // <a^4>
    double n = 0.0;            // <a+ a>
    double n2corr = 0.0;       // <a+^2 a^2>
    double a2ad2 = 0.0;        // <a^2 a+^2>
    Source source = Source::Oracle;
};

/// All moments from the truncated-matrix oracle.
MomentSet moments_oracle(const FockState& state);

/// Closed-form moment series; defined for the three families with
/// explicit formulas (combination-s1, superposition-s2,
/// gk-combination-s1).
MomentSet moments_closed_form(const StateSpec& spec,
                              double tol = kDefaultTruncTol);

/// g2(0) = <a+^2 a^2> / <a+ a>^2; NaN on vacuum input (undefined).
double g2(const MomentSet& m);

/// (I1, I2): quadrature squeezing indicators; squeezing in x iff
/// I1 < 0, in y iff I2 < 0.
std::pair<double, double> quadrature_squeezing(const MomentSet& m);

/// (I3, I4): amplitude-squared squeezing indicators for X = (a^2+a+^2)/2
/// and Y = (a^2-a+^2)/2i.
std::pair<double, double> amplitude_squared_squeezing(const MomentSet& m);

struct NonclassicalityReport {
    double g2 = 0.0;
    double I1 = 0.0;
    double I2 = 0.0;
    double I3 = 0.0;
    double I4 = 0.0;
    double mean_n = 0.0;
};

NonclassicalityReport evaluate(const MomentSet& m);

/// Quadrature variances: 4 Vx = I1 + 1, 4 Vy = I2 + 1.
std::pair<double, double> quadrature_variances(const NonclassicalityReport& r);

}  // namespace nlcs

#endif
