#include "nlcs/nonclassicality.hpp"

#include <cmath>
#include <limits>

#include "nlcs/errors.hpp"

namespace nlcs {

namespace {

using std::complex;

// Adaptive sum of a log-space series: stops once terms stay 18 decades
// below the running peak.
complex<double> sum_series(const std::function<LogComplex(int)>& term,
                           const std::string& what) {
    std::vector<LogComplex> terms;
    double peak = -std::numeric_limits<double>::infinity();
    int quiet = 0;
    for (int n = 0; n < 4 * max_dim(); ++n) {
        const LogComplex t = term(n);
        terms.push_back(t);
        peak = std::max(peak, t.log_mag);
        if (n >= 8 && (t.is_zero() || t.log_mag < peak - 42.0)) {
            if (++quiet >= 3) {
                if (std::isinf(peak)) return 0.0;  // all terms vanished
                complex<double> sum = 0.0;
                for (const auto& v : terms) sum += v.value_shifted(peak);
                return sum * std::exp(peak);
            }
        } else {
            quiet = 0;
        }
    }
    throw TruncationError(what + ": moment series did not settle");
}

LogComplex real_log(double log_mag) {
    return LogComplex::from_polar(log_mag, 0.0);
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

LogComplex log_power(complex<double> z, int n) {
    if (n == 0) return LogComplex::one();
    if (z == complex<double>(0.0, 0.0)) return LogComplex::zero();
    return LogComplex::from_polar(n * std::log(std::abs(z)), n * std::arg(z));
}

// p * log(a) with the 0 * log(0) = 0 convention for the n = 0 term
double log_abs_pow(double a, double p) {
    if (p == 0.0) return 0.0;
    return p * std::log(a);
}

// log(1 + ([f(n)]!)^2)
double log_one_plus_fact_sq(const NonlinearityFunction& f, int n) {
    const double t = 2.0 * f.factorial(n).log_mag;
    if (t > 0) return t + std::log1p(std::exp(-t));
    return std::log1p(std::exp(t));
}

MomentSet closed_form_s1(const NonlinearityFunction& f, complex<double> alpha,
                         double tol) {
    const BuiltState built = build_combination_s1(f, alpha, tol);
    const double n2 = built.norm_constant * built.norm_constant;
    auto p = [&f](int n) { return real_log(log_one_plus_fact_sq(f, n)); };
    auto off_diag = [&](int k) {
        return sum_series(
            [&, k](int n) {
                return log_power(alpha, n + k) *
                       log_power(std::conj(alpha), n) * p(n) * p(n + k) /
                       (f.factorial(n) * f.factorial(n + k)) /
                       real_log(log_factorial(n));
            },
            "s1 off-diagonal moment");
    };
    auto diag = [&](int k, auto weight) {
        return sum_series(
                   [&, k](int n) {
                       const LogComplex pk = p(n + k) / f.factorial(n + k);
                       return real_log(log_abs_pow(std::abs(alpha),
                                                   2.0 * (n + k)) -
                                       log_factorial(n) +
                                       std::log(weight(n))) *
                              pk * pk.conj();
                   },
                   "s1 diagonal moment")
            .real();
    };
    MomentSet m;
    m.source = MomentSet::Source::ClosedForm;
    m.a = n2 * off_diag(1);
    m.a2 = n2 * off_diag(2);
    m.a4 = n2 * off_diag(4);
    m.n = n2 * diag(1, [](int) { return 1.0; });
    m.n2corr = n2 * diag(2, [](int) { return 1.0; });
    m.a2ad2 = n2 * diag(0, [](int n) { return (n + 1.0) * (n + 2.0); });
    return m;
}

MomentSet closed_form_s2(const NonlinearityFunction& f, complex<double> alpha,
                         double tol) {
    const BuiltState built = build_superposition_s2(f, alpha, tol);
    const double n2 = built.norm_constant * built.norm_constant;
    const double log_nf =
        std::log(build_nlcs(f, alpha, tol).norm_constant);
    const double log_nt =
        std::log(build_dual(f, alpha, tol).norm_constant);
    auto g = [&](int n) {
        return real_log(log_nf) +
               real_log(log_nt) * f.factorial(n) * f.factorial(n);
    };
    auto off_diag = [&](int k) {
        return sum_series(
            [&, k](int n) {
                return log_power(alpha, n + k) *
                       log_power(std::conj(alpha), n) * g(n) * g(n + k) /
                       (f.factorial(n) * f.factorial(n + k)) /
                       real_log(log_factorial(n));
            },
            "s2 off-diagonal moment");
    };
    auto diag = [&](int k, auto weight) {
        return sum_series(
                   [&, k](int n) {
                       const LogComplex gk = g(n + k) / f.factorial(n + k);
                       return real_log(log_abs_pow(std::abs(alpha),
                                                   2.0 * (n + k)) -
                                       log_factorial(n) +
                                       std::log(weight(n))) *
                              gk * gk.conj();
                   },
                   "s2 diagonal moment")
            .real();
    };
    MomentSet m;
    m.source = MomentSet::Source::ClosedForm;
    m.a = n2 * off_diag(1);
    m.a2 = n2 * off_diag(2);
    m.a4 = n2 * off_diag(4);
    m.n = n2 * diag(1, [](int) { return 1.0; });
    m.n2corr = n2 * diag(2, [](int) { return 1.0; });
    m.a2ad2 = n2 * diag(0, [](int n) { return (n + 1.0) * (n + 2.0); });
    return m;
}

MomentSet closed_form_gk_s1(const SpectrumModel& s, complex<double> z,
                            double gamma, double tol) {
    const BuiltState built = build_gk_combination_s1(s, z, gamma, tol);
    const double n2 = built.norm_constant * built.norm_constant;
    auto kker = [&](int n) { return gk_combination_kernel(s, gamma, n); };
    auto off_diag = [&](int k) {
        return sum_series(
            [&, k](int n) {
                // sqrt((n+1)...(n+k)) = sqrt((n+k)!/n!)
                const double log_rising =
                    0.5 * (log_factorial(n + k) - log_factorial(n));
                return log_power(z, n + k) * log_power(std::conj(z), n) *
                       kker(n + k) * kker(n).conj() *
                       real_log(-2.0 * log_factorial(n) -
                                0.5 * (s.log_rho(n) + s.log_rho(n + k)) -
                                log_rising);
            },
            "gk-s1 off-diagonal moment");
    };
    auto diag = [&](auto weight) {
        return sum_series(
                   [&](int n) {
                       const double w = weight(n);
                       if (w == 0.0) return LogComplex::zero();
                       const LogComplex kn = kker(n);
                       return kn * kn.conj() *
                              real_log(log_abs_pow(std::abs(z), 2.0 * n) -
                                       2.0 * log_factorial(n) -
                                       s.log_rho(n) + std::log(w));
                   },
                   "gk-s1 diagonal moment")
            .real();
    };
    MomentSet m;
    m.source = MomentSet::Source::ClosedForm;
    m.a = n2 * off_diag(1);
    m.a2 = n2 * off_diag(2);
    m.a4 = n2 * off_diag(4);
    m.n = n2 * diag([](int n) { return double(n); });
    m.n2corr = n2 * diag([](int n) { return n * (n - 1.0); });
    m.a2ad2 = n2 * diag([](int n) { return (n + 1.0) * (n + 2.0); });
    return m;
}

}  // namespace

MomentSet moments_oracle(const FockState& state) {
    using enum Ladder;
    MomentSet m;
    m.source = MomentSet::Source::Oracle;
    m.a = expectation(state, {Annihilate});
    m.a2 = expectation(state, {Annihilate, Annihilate});
    m.a4 = expectation(state, {Annihilate, Annihilate, Annihilate, Annihilate});
    m.n = expectation(state, {Create, Annihilate}).real();
    m.n2corr =
        expectation(state, {Create, Create, Annihilate, Annihilate}).real();
    m.a2ad2 =
        expectation(state, {Annihilate, Annihilate, Create, Create}).real();
    return m;
}

MomentSet moments_closed_form(const StateSpec& spec, double tol) {
    const ModelEntry entry = lookup_model(spec.model, spec.lambda, spec.kappa);
    switch (spec.kind) {
        case StateKind::CombinationS1:
            return closed_form_s1(entry.f, spec.alpha, tol);
        case StateKind::SuperpositionS2:
            return closed_form_s2(entry.f, spec.alpha, tol);
        case StateKind::GkCombinationS1:
            if (!entry.spectrum) {
                throw ConfigError("gk-combination-s1 needs a spectrum model");
            }
            return closed_form_gk_s1(*entry.spectrum, spec.alpha, spec.gamma,
                                     tol);
        default:
            throw ConfigError(
                "closed-form moments exist for combination-s1, "
                "superposition-s2 and gk-combination-s1 only");
    }
}

double g2(const MomentSet& m) {
    if (m.n <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return m.n2corr / (m.n * m.n);
}

std::pair<double, double> quadrature_squeezing(const MomentSet& m) {
    const double re_a2 = m.a2.real();
    const double re_asq = (m.a * m.a).real();
    const double abs_asq = std::norm(m.a);
    const double i1 = 2.0 * re_a2 - 2.0 * re_asq - 2.0 * abs_asq + 2.0 * m.n;
    const double i2 = -2.0 * re_a2 + 2.0 * re_asq - 2.0 * abs_asq + 2.0 * m.n;
    return {i1, i2};
}

std::pair<double, double> amplitude_squared_squeezing(const MomentSet& m) {
    const double re_a4 = m.a4.real();
    const double re_a2sq = (m.a2 * m.a2).real();
    const double abs_a2sq = std::norm(m.a2);
    const double i3 = 0.25 * (2.0 * re_a4 + m.n2corr + m.a2ad2 -
                              2.0 * re_a2sq - 2.0 * abs_a2sq) -
                      m.n - 0.5;
    const double i4 = 0.25 * (-2.0 * re_a4 + m.n2corr + m.a2ad2 +
                              2.0 * re_a2sq - 2.0 * abs_a2sq) -
                      m.n - 0.5;
    return {i3, i4};
}

NonclassicalityReport evaluate(const MomentSet& m) {
    NonclassicalityReport r;
    r.g2 = g2(m);
    std::tie(r.I1, r.I2) = quadrature_squeezing(m);
    std::tie(r.I3, r.I4) = amplitude_squared_squeezing(m);
    r.mean_n = m.n;
    return r;
}

std::pair<double, double> quadrature_variances(
    const NonclassicalityReport& r) {
    return {(r.I1 + 1.0) / 4.0, (r.I2 + 1.0) / 4.0};
}

}  // namespace nlcs
