#include "nlcs/states.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include <nlohmann/json.hpp>

#include "nlcs/errors.hpp"

namespace nlcs {

namespace {

struct SeriesResult {
    std::vector<std::complex<double>> coeffs;  // unnormalized, shifted
    double log_norm_sq;   // log sum of squared magnitudes (unshifted)
    double tail_bound;    // relative squared-norm weight beyond truncation
};

// Evaluates the coefficient series term(0..N-1) with N grown in powers
// of two until the geometric tail estimate drops below tol.
SeriesResult build_series(const std::function<LogComplex(int)>& term,
                          double tol, const std::string& what) {
    const int cap = max_dim();
    for (int dim = 32; dim <= cap; dim *= 2) {
        const int n_terms = std::min(dim, cap);
        std::vector<LogComplex> t(n_terms);
        std::vector<double> l2(n_terms);  // log |term|^2
        double shift = -std::numeric_limits<double>::infinity();
        for (int n = 0; n < n_terms; ++n) {
            t[n] = term(n);
            l2[n] = 2.0 * t[n].log_mag;
            shift = std::max(shift, l2[n]);
        }
        double sum = 0.0;
        for (double v : l2) sum += std::exp(v - shift);

        // worst-case ratio over the last few terms as the geometric rate
        double rate = 0.0;
        for (int n = n_terms - 4; n < n_terms; ++n) {
            if (std::isinf(l2[n]) && l2[n] < 0) continue;  // vanished term
            rate = std::max(rate, std::exp(l2[n] - l2[n - 1]));
        }
        const double last = std::exp(l2[n_terms - 1] - shift);
        if (rate < 1.0) {
            const double tail = last * rate / (1.0 - rate) / sum;
            if (tail < tol) {
                SeriesResult r;
                r.coeffs.resize(n_terms);
                for (int n = 0; n < n_terms; ++n) {
                    r.coeffs[n] = t[n].value_shifted(0.5 * shift);
                }
                r.log_norm_sq = shift + std::log(sum);
                r.tail_bound = tail;
                return r;
            }
        }
        if (n_terms == cap) break;
    }
    char tol_str[32];
    std::snprintf(tol_str, sizeof(tol_str), "%g", tol);
    throw TruncationError(what + ": series tail did not reach " + tol_str +
                          " below dim cap " + std::to_string(max_dim()));
}

BuiltState finish(SeriesResult r) {
    BuiltState b{FockState(std::move(r.coeffs), r.tail_bound),
                 std::exp(-0.5 * r.log_norm_sq)};
    return b;
}

void require_inside(double amplitude, double radius, const std::string& what) {
    if (!(amplitude < radius)) {
        throw DomainError(what + ": amplitude " + std::to_string(amplitude) +
                          " is not inside the convergence radius " +
                          std::to_string(radius));
    }
}

LogComplex log_power(std::complex<double> z, int n) {
    if (n == 0) return LogComplex::one();
    if (z == std::complex<double>(0.0, 0.0)) return LogComplex::zero();
    return LogComplex::from_polar(n * std::log(std::abs(z)),
                                  n * std::arg(z));
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

const char* to_string(StateKind kind) {
    switch (kind) {
        case StateKind::Nlcs: return "nlcs";
        case StateKind::Dual: return "dual";
        case StateKind::CombinationS1: return "combination-s1";
        case StateKind::SuperpositionS2: return "superposition-s2";
        case StateKind::Gk: return "gk";
        case StateKind::GkDual: return "gk-dual";
        case StateKind::GkCombinationS1: return "gk-combination-s1";
    }
    return "?";
}

StateKind state_kind_from_string(const std::string& s) {
    if (s == "nlcs") return StateKind::Nlcs;
    if (s == "dual") return StateKind::Dual;
    if (s == "combination-s1") return StateKind::CombinationS1;
    if (s == "superposition-s2") return StateKind::SuperpositionS2;
    if (s == "gk") return StateKind::Gk;
    if (s == "gk-dual") return StateKind::GkDual;
    if (s == "gk-combination-s1") return StateKind::GkCombinationS1;
    throw ConfigError("unknown state kind: " + s);
}

bool is_gk_kind(StateKind kind) {
    return kind == StateKind::Gk || kind == StateKind::GkDual ||
           kind == StateKind::GkCombinationS1;
}

nlohmann::json StateSpec::to_json() const {
    nlohmann::json j{{"kind", to_string(kind)},
                     {"model", model},
                     {"alpha", {alpha.real(), alpha.imag()}}};
    if (is_gk_kind(kind)) j["gamma"] = gamma;
    if (model == "poschl-teller") {
        j["lambda"] = lambda;
        j["kappa"] = kappa;
    }
    return j;
}

StateSpec StateSpec::from_json(const nlohmann::json& j) {
    StateSpec spec;
    spec.kind = state_kind_from_string(j.at("kind").get<std::string>());
    spec.model = j.at("model").get<std::string>();
    const auto& a = j.at("alpha");
    if (a.is_array()) {
        spec.alpha = {a.at(0).get<double>(),
                      a.size() > 1 ? a.at(1).get<double>() : 0.0};
    } else {
        spec.alpha = {a.get<double>(), 0.0};
    }
    spec.gamma = j.value("gamma", 0.0);
    spec.lambda = j.value("lambda", 4.0);
    spec.kappa = j.value("kappa", 4.0);
    return spec;
}

BuiltState build_nlcs(const NonlinearityFunction& f, std::complex<double> alpha,
                      double tol) {
    require_inside(std::abs(alpha), f.domain_radius(), "nlcs(" + f.name() + ")");
    return finish(build_series(
        [&f, alpha](int n) {
            return log_power(alpha, n) *
                   LogComplex::from_polar(-0.5 * log_factorial(n), 0.0) /
                   f.factorial(n);
        },
        tol, "nlcs(" + f.name() + ")"));
}

BuiltState build_dual(const NonlinearityFunction& f, std::complex<double> beta,
                      double tol) {
    require_inside(std::abs(beta), f.dual_domain_radius(),
                   "dual(" + f.name() + ")");
    return finish(build_series(
        [&f, beta](int n) {
            return log_power(beta, n) * f.factorial(n) *
                   LogComplex::from_polar(-0.5 * log_factorial(n), 0.0);
        },
        tol, "dual(" + f.name() + ")"));
}

namespace {

// log(1 + ([f(n)]!)^2) for real positive f
double log1p_factorial_sq(const NonlinearityFunction& f, int n) {
    const double t = 2.0 * f.factorial(n).log_mag;
    if (t > 0) return t + std::log1p(std::exp(-t));
    return std::log1p(std::exp(t));
}

}  // namespace

BuiltState build_combination_s1(const NonlinearityFunction& f,
                                std::complex<double> alpha, double tol) {
    const double radius = std::min(f.domain_radius(), f.dual_domain_radius());
    require_inside(std::abs(alpha), radius, "combination-s1(" + f.name() + ")");
    BuiltState b = finish(build_series(
        [&f, alpha](int n) {
            return log_power(alpha, n) *
                   LogComplex::from_polar(log1p_factorial_sq(f, n) -
                                              0.5 * log_factorial(n),
                                          0.0) /
                   f.factorial(n);
        },
        tol, "combination-s1(" + f.name() + ")"));
    b.c1 = b.norm_constant / build_nlcs(f, alpha, tol).norm_constant;
    b.c2 = b.norm_constant / build_dual(f, alpha, tol).norm_constant;
    return b;
}

BuiltState build_combination(const NonlinearityFunction& f,
                             std::complex<double> alpha,
                             std::complex<double> beta, double tol) {
    require_inside(std::abs(alpha), f.domain_radius(), "combination original");
    require_inside(std::abs(beta), f.dual_domain_radius(), "combination dual");
    return finish(build_series(
        [&f, alpha, beta](int n) {
            const LogComplex num =
                log_power(alpha, n) +
                log_power(beta, n) * f.factorial(n) * f.factorial(n);
            return num *
                   LogComplex::from_polar(-0.5 * log_factorial(n), 0.0) /
                   f.factorial(n);
        },
        tol, "combination(" + f.name() + ")"));
}

BuiltState build_superposition_s2(const NonlinearityFunction& f,
                                  std::complex<double> alpha, double tol) {
    const double radius = std::min(f.domain_radius(), f.dual_domain_radius());
    require_inside(std::abs(alpha), radius,
                   "superposition-s2(" + f.name() + ")");
    const double log_nf = std::log(build_nlcs(f, alpha, tol).norm_constant);
    const double log_nt = std::log(build_dual(f, alpha, tol).norm_constant);
    return finish(build_series(
        [&f, alpha, log_nf, log_nt](int n) {
            // G(n,|alpha|^2) = N_f + N~_f ([f(n)]!)^2
            const LogComplex g =
                LogComplex::from_polar(log_nf, 0.0) +
                LogComplex::from_polar(log_nt, 0.0) * f.factorial(n) *
                    f.factorial(n);
            return log_power(alpha, n) * g *
                   LogComplex::from_polar(-0.5 * log_factorial(n), 0.0) /
                   f.factorial(n);
        },
        tol, "superposition-s2(" + f.name() + ")"));
}

namespace {

void require_gk_params(double gamma) {
    if (gamma == 0.0) throw ConfigError("gamma must be nonzero for GK states");
}

}  // namespace

BuiltState build_gkcs(const SpectrumModel& s, std::complex<double> z,
                      double gamma, double tol) {
    require_gk_params(gamma);
    require_inside(std::abs(z), s.gk_radius(), "gk(" + s.name() + ")");
    return finish(build_series(
        [&s, z, gamma](int n) {
            return log_power(z, n) *
                   LogComplex::from_polar(-0.5 * s.log_rho(n),
                                          -s.energy(n) * gamma);
        },
        tol, "gk(" + s.name() + ")"));
}

BuiltState build_gk_dual(const SpectrumModel& s, std::complex<double> z,
                         double gamma, double tol) {
    require_gk_params(gamma);
    require_inside(std::abs(z), s.gk_dual_radius(), "gk-dual(" + s.name() + ")");
    return finish(build_series(
        [&s, z, gamma](int n) {
            return log_power(z, n) *
                   LogComplex::from_polar(-0.5 * s.log_mu(n),
                                          -s.epsilon(n) * gamma);
        },
        tol, "gk-dual(" + s.name() + ")"));
}

BuiltState build_gk_combination_s1(const SpectrumModel& s,
                                   std::complex<double> z, double gamma,
                                   double tol) {
    require_gk_params(gamma);
    const double radius = std::min(s.gk_radius(), s.gk_dual_radius());
    require_inside(std::abs(z), radius, "gk-combination-s1(" + s.name() + ")");
    return finish(build_series(
        [&s, z, gamma](int n) {
            const LogComplex k = gk_combination_kernel(s, gamma, n);
            if (k.is_zero()) {
                throw DomainError("K(n,gamma) vanished at n = " +
                                  std::to_string(n));
            }
            return log_power(z, n) * k *
                   LogComplex::from_polar(
                       -log_factorial(n) - 0.5 * s.log_rho(n), 0.0);
        },
        tol, "gk-combination-s1(" + s.name() + ")"));
}

BuiltState build_state(const StateSpec& spec, double tol) {
    const ModelEntry entry = lookup_model(spec.model, spec.lambda, spec.kappa);
    if (is_gk_kind(spec.kind) && !entry.spectrum) {
        throw ConfigError("model '" + spec.model +
                          "' has no spectrum; GK kinds need one");
    }
    switch (spec.kind) {
        case StateKind::Nlcs:
            return build_nlcs(entry.f, spec.alpha, tol);
        case StateKind::Dual:
            return build_dual(entry.f, spec.alpha, tol);
        case StateKind::CombinationS1:
            return build_combination_s1(entry.f, spec.alpha, tol);
        case StateKind::SuperpositionS2:
            return build_superposition_s2(entry.f, spec.alpha, tol);
        case StateKind::Gk:
            return build_gkcs(*entry.spectrum, spec.alpha, spec.gamma, tol);
        case StateKind::GkDual:
            return build_gk_dual(*entry.spectrum, spec.alpha, spec.gamma, tol);
        case StateKind::GkCombinationS1:
            return build_gk_combination_s1(*entry.spectrum, spec.alpha,
                                           spec.gamma, tol);
    }
    throw ConfigError("unhandled state kind");
}

std::complex<double> overlap_closed_form(const StateSpec& spec, double tol) {
    const ModelEntry entry = lookup_model(spec.model, spec.lambda, spec.kappa);
    switch (spec.kind) {
        case StateKind::Nlcs:
        case StateKind::Dual: {
            const double nf = build_nlcs(entry.f, spec.alpha, tol).norm_constant;
            const double nt = build_dual(entry.f, spec.alpha, tol).norm_constant;
            return nf * nt * std::exp(std::norm(spec.alpha));
        }
        case StateKind::Gk:
        case StateKind::GkDual: {
            if (!entry.spectrum) {
                throw ConfigError("GK overlap needs a spectrum model");
            }
            const SpectrumModel& s = *entry.spectrum;
            const double nf =
                build_gkcs(s, spec.alpha, spec.gamma, tol).norm_constant;
            const double nt =
                build_gk_dual(s, spec.alpha, spec.gamma, tol).norm_constant;
            const double z2 = std::norm(spec.alpha);
            if (z2 == 0.0) return nf * nt;
            std::complex<double> sum = 0.0;
            for (int n = 0; n < max_dim(); ++n) {
                const double mag =
                    std::exp(n * std::log(z2) - log_factorial(n));
                const std::complex<double> term = std::polar(
                    mag, (s.energy(n) - s.epsilon(n)) * spec.gamma);
                sum += term;
                if (n > 4 && mag < 1e-18 * std::abs(sum)) break;
            }
            return nf * nt * sum;
        }
        default:
            throw ConfigError(
                "overlap_closed_form supports the nlcs/dual and gk/gk-dual "
                "pairs only");
    }
}

}  // namespace nlcs
