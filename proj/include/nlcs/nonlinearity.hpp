#ifndef NLCS_NONLINEARITY_HPP
#define NLCS_NONLINEARITY_HPP

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nlcs/log_complex.hpp"

namespace nlcs {

/// A nonlinearity function f(n) together with the running product
/// [f(n)]! = f(1)f(2)...f(n), kept in log space. [f(0)]! == 1 by
/// convention. Values may be complex (the combined Gazeau-Klauder
/// nonlinearity carries a phase); the original nonlinear-CS machinery
/// only ever sees real positive f.
class NonlinearityFunction {
 public:
    NonlinearityFunction(std::string name,
                         std::function<std::complex<double>(int)> eval,
                         double domain_radius, double dual_domain_radius);

    const std::string& name() const { return name_; }

    /// f(n) for n >= 1; f(0) is never consumed by a factorial.
    std::complex<double> value(int n) const;

    /// [f(n)]! as (log-magnitude, phase).
    LogComplex factorial(int n) const;

    /// Convergence radius in |alpha| of the series alpha^n/(sqrt(n!) [f(n)]!).
    double domain_radius() const { return domain_radius_; }

    /// Convergence radius of the dual series alpha^n [f(n)]!/sqrt(n!).
    double dual_domain_radius() const { return dual_domain_radius_; }

    bool is_real() const { return real_; }

    /// The function 1/f, with swapped domain radii. (1/f)(0) := 0 so a
    /// vanishing f(0) (harmonious-type f) stays representable.
    NonlinearityFunction inverse() const;

 private:
    void ensure_cached(int n) const;

    std::string name_;
    std::function<std::complex<double>(int)> eval_;
    double domain_radius_;
    double dual_domain_radius_;
    mutable bool real_ = true;
    mutable std::vector<std::complex<double>> values_;
    mutable std::vector<LogComplex> factorials_;
};

/// Discrete nondegenerate spectrum e_n with e_0 = 0, plus the
/// Gazeau-Klauder companions rho(n) = [e_n]!, mu(n) = (n!)^2/rho(n)
/// and epsilon_n = n^2/e_n (epsilon_0 := 0), all in log space.
class SpectrumModel {
 public:
    SpectrumModel(std::string name, std::function<double(int)> e);

    const std::string& name() const { return name_; }
    double energy(int n) const;
    double epsilon(int n) const;
    double log_rho(int n) const;
    double log_mu(int n) const;

    /// Convergence radius in |z| of the GK series z^n/sqrt(rho(n)).
    double gk_radius() const { return gk_radius_; }
    /// Convergence radius in |z| of the dual series z^n/sqrt(mu(n)).
    double gk_dual_radius() const { return gk_dual_radius_; }

 private:
    void ensure_cached(int n) const;

    std::string name_;
    std::function<double(int)> e_;
    double gk_radius_;
    double gk_dual_radius_;
    mutable std::vector<double> energies_;
    mutable std::vector<double> log_rho_;
};

// Numeric stand-in for lim_{n->inf} g(n): compare g at n = 10^6 and
// 2*10^6; agreement within 1e-4 relative yields the value, divergence
// yields +infinity.
double numeric_limit(const std::function<double(int)>& g);

NonlinearityFunction identity_nonlinearity();

/// Hydrogen-like spectrum e_n = 1 - 1/(n+1)^2 and f(n) = sqrt(n+2)/(n+1).
std::pair<SpectrumModel, NonlinearityFunction> hydrogen_like();

/// Poschl-Teller spectrum e_n = n(n+lambda+kappa), f(n) = sqrt(n+lambda+kappa);
/// requires lambda > 1 and kappa > 1.
std::pair<SpectrumModel, NonlinearityFunction> poschl_teller(double lambda,
                                                             double kappa);

/// Nonlinearity of the combination of a dual pair:
/// f_s1(n) = [1 + ([f(n-1)]!)^2] / [1 + ([f(n)]!)^2] * f(n).
NonlinearityFunction combined_nonlinearity(const NonlinearityFunction& f);

/// Complex nonlinearity of the combined GK state,
/// f_s1(n) = K(n-1,gamma)/K(n,gamma) with
/// K(n,gamma) = n! e^{-i gamma e_n} + [e_n]! e^{-i gamma epsilon_n}.
NonlinearityFunction gk_combined_nonlinearity(const SpectrumModel& s,
                                              double gamma);

/// K(n,gamma) itself, exposed for the state builders.
LogComplex gk_combination_kernel(const SpectrumModel& s, double gamma, int n);

/// Deformed-oscillator spectrum e_n = n |f(n)|^2 for n = 0..n_max.
std::vector<double> deformed_spectrum(const NonlinearityFunction& f,
                                      int n_max);

/// f given as a table [f(1), f(2), ...]; the CLI feeds this from a
/// JSON file {"f": [...]}. Beyond the table the last entry repeats.
NonlinearityFunction tabulated_nonlinearity(std::string name,
                                            const std::vector<double>& values);

/// Registry entry: a nonlinearity function plus, when the model derives
/// from a spectrum, the spectrum itself.
struct ModelEntry {
    std::optional<SpectrumModel> spectrum;
    NonlinearityFunction f;
};

/// Lookup by registry name: "identity", "hydrogen", "poschl-teller"
/// (lambda/kappa apply to the latter), or a path to a tabulated-f JSON file.
ModelEntry lookup_model(const std::string& name, double lambda = 4.0,
                        double kappa = 4.0);

}  // namespace nlcs

#endif
