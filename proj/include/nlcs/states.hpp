#ifndef NLCS_STATES_HPP
#define NLCS_STATES_HPP

#include <complex>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "nlcs/config.hpp"
#include "nlcs/fock_core.hpp"
#include "nlcs/nonlinearity.hpp"

namespace nlcs {

enum class StateKind {
    Nlcs,
    Dual,
    CombinationS1,
    SuperpositionS2,
    Gk,
    GkDual,
    GkCombinationS1,
};

const char* to_string(StateKind kind);
StateKind state_kind_from_string(const std::string& s);
bool is_gk_kind(StateKind kind);

/// Everything needed to name one state: which family, which registry
/// model, and the amplitude/parameters. Round-trips through JSON as
/// {"kind": "...", "model": "...", "alpha": [re, im], "gamma": 0.5,
///  "lambda": 4, "kappa": 4}.
struct StateSpec {
    StateKind kind = StateKind::Nlcs;
    std::string model = "identity";
    std::complex<double> alpha;  // alpha for f-CS kinds, z for GK kinds
    double gamma = 0.0;          // GK kinds only
    double lambda = 4.0;         // poschl-teller only
    double kappa = 4.0;

    nlohmann::json to_json() const;
    static StateSpec from_json(const nlohmann::json& j);
};

/// A builder result: the truncated state, the normalization constant of
/// the defining series, and for the s1 combination the component
/// weights c1 = N_s1/N_f and c2 = N_s1/N~_f.
struct BuiltState {
    FockState state;
    double norm_constant;
    double c1 = 0.0;
    double c2 = 0.0;
};

/// |alpha,f>: coefficients alpha^n / (sqrt(n!) [f(n)]!).
BuiltState build_nlcs(const NonlinearityFunction& f, std::complex<double> alpha,
                      double tol = kDefaultTruncTol);

/// Dual state: coefficients beta^n [f(n)]! / sqrt(n!); identical to
/// build_nlcs with f replaced by 1/f.
BuiltState build_dual(const NonlinearityFunction& f, std::complex<double> beta,
                      double tol = kDefaultTruncTol);

/// Combination (first kind): coefficients
/// alpha^n (1 + ([f(n)]!)^2) / (sqrt(n!) [f(n)]!).
BuiltState build_combination_s1(const NonlinearityFunction& f,
                                std::complex<double> alpha,
                                double tol = kDefaultTruncTol);

/// General two-amplitude combination of the un-normalized dual pair,
/// coefficients (alpha^n + beta^n ([f(n)]!)^2) / (sqrt(n!) [f(n)]!).
BuiltState build_combination(const NonlinearityFunction& f,
                             std::complex<double> alpha,
                             std::complex<double> beta,
                             double tol = kDefaultTruncTol);

/// Superposition (second kind): coefficients
/// alpha^n G(n,|alpha|^2) / (sqrt(n!) [f(n)]!) with
/// G = N_f + N~_f ([f(n)]!)^2 built from the normalized components.
BuiltState build_superposition_s2(const NonlinearityFunction& f,
                                  std::complex<double> alpha,
                                  double tol = kDefaultTruncTol);

/// Gazeau-Klauder state: coefficients z^n e^{-i e_n gamma} / sqrt(rho(n)).
BuiltState build_gkcs(const SpectrumModel& s, std::complex<double> z,
                      double gamma, double tol = kDefaultTruncTol);

/// GK dual: coefficients z^n e^{-i epsilon_n gamma} / sqrt(mu(n)).
BuiltState build_gk_dual(const SpectrumModel& s, std::complex<double> z,
                         double gamma, double tol = kDefaultTruncTol);

/// Combined GK state: coefficients z^n K(n,gamma) / (n! sqrt(rho(n))).
BuiltState build_gk_combination_s1(const SpectrumModel& s,
                                   std::complex<double> z, double gamma,
                                   double tol = kDefaultTruncTol);

/// Registry-dispatching builder.
BuiltState build_state(const StateSpec& spec, double tol = kDefaultTruncTol);

/// Closed-form overlap of a dual pair at equal amplitude:
/// <alpha,f|dual> = N_f N~_f exp(|alpha|^2) for f-CS pairs,
/// N Ñ sum |z|^{2n} e^{i(e_n - epsilon_n) gamma} / n! for GK pairs.
/// `spec` names either member of the pair; kinds Nlcs/Dual and Gk/GkDual
/// are the supported pair kinds.
std::complex<double> overlap_closed_form(const StateSpec& spec,
                                         double tol = kDefaultTruncTol);

}  // namespace nlcs

#endif
