#include "nlcs/nonlinearity.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <utility>

#include <nlohmann/json.hpp>

#include "nlcs/config.hpp"
#include "nlcs/errors.hpp"

namespace nlcs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(1 + e^{t}) without overflow
double log1p_exp(double t) {
    if (t > 0) return t + std::log1p(std::exp(-t));
    return std::log1p(std::exp(t));
}

}  // namespace

double numeric_limit(const std::function<double(int)>& g) {
    const double a = g(1'000'000);
    const double b = g(2'000'000);
    if (std::isfinite(a) && std::isfinite(b) &&
        std::abs(a - b) <= 1e-4 * std::max(std::abs(a), std::abs(b))) {
        return b;
    }
    return kInf;
}

NonlinearityFunction::NonlinearityFunction(
    std::string name, std::function<std::complex<double>(int)> eval,
    double domain_radius, double dual_domain_radius)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      domain_radius_(domain_radius),
      dual_domain_radius_(dual_domain_radius) {
    values_.push_back(eval_(0));
    factorials_.push_back(LogComplex::one());  // [f(0)]! == 1
    ensure_cached(256);
    for (const auto& v : values_) {
        if (v.imag() != 0.0) {
            real_ = false;
            break;
        }
    }
}

void NonlinearityFunction::ensure_cached(int n) const {
    while (static_cast<int>(values_.size()) <= n) {
        const int k = static_cast<int>(values_.size());
        const std::complex<double> fk = eval_(k);
        values_.push_back(fk);
        factorials_.push_back(factorials_.back() * LogComplex::from(fk));
        if (fk.imag() != 0.0) real_ = false;
    }
}

std::complex<double> NonlinearityFunction::value(int n) const {
    ensure_cached(n);
    return values_[n];
}

LogComplex NonlinearityFunction::factorial(int n) const {
    ensure_cached(n);
    return factorials_[n];
}

NonlinearityFunction NonlinearityFunction::inverse() const {
    auto base = eval_;
    return NonlinearityFunction(
        name_ + "-inverse",
        [base](int n) -> std::complex<double> {
            const std::complex<double> v = base(n);
            if (n == 0 && v == std::complex<double>(0.0, 0.0)) return 0.0;
            return 1.0 / v;
        },
        dual_domain_radius_, domain_radius_);
}

SpectrumModel::SpectrumModel(std::string name, std::function<double(int)> e)
    : name_(std::move(name)), e_(std::move(e)) {
    if (e_(0) != 0.0) {
        throw ConfigError("spectrum '" + name_ + "' must satisfy e_0 = 0");
    }
    energies_.push_back(0.0);
    log_rho_.push_back(0.0);  // rho(0) = 1
    ensure_cached(256);
    gk_radius_ = std::sqrt(numeric_limit(e_));
    auto eps = [this](int n) { return double(n) * double(n) / e_(n); };
    gk_dual_radius_ = std::sqrt(numeric_limit(eps));
}

void SpectrumModel::ensure_cached(int n) const {
    while (static_cast<int>(energies_.size()) <= n) {
        const int k = static_cast<int>(energies_.size());
        const double ek = e_(k);
        if (!(ek > energies_.back())) {
            throw ConfigError("spectrum '" + name_ +
                              "' is not strictly increasing at n = " +
                              std::to_string(k));
        }
        energies_.push_back(ek);
        log_rho_.push_back(log_rho_.back() + std::log(ek));
    }
}

double SpectrumModel::energy(int n) const {
    ensure_cached(n);
    return energies_[n];
}

double SpectrumModel::epsilon(int n) const {
    if (n == 0) return 0.0;  // the 0/0 convention; it keeps K(0,gamma) = 2
    return double(n) * double(n) / energy(n);
}

double SpectrumModel::log_rho(int n) const {
    ensure_cached(n);
    return log_rho_[n];
}

double SpectrumModel::log_mu(int n) const {
    return 2.0 * std::lgamma(n + 1.0) - log_rho(n);
}

NonlinearityFunction identity_nonlinearity() {
    return NonlinearityFunction(
        "identity", [](int) { return std::complex<double>(1.0, 0.0); }, kInf,
        kInf);
}

std::pair<SpectrumModel, NonlinearityFunction> hydrogen_like() {
    SpectrumModel s("hydrogen",
                    [](int n) { return 1.0 - 1.0 / ((n + 1.0) * (n + 1.0)); });
    auto fval = [](int n) { return std::sqrt(n + 2.0) / (n + 1.0); };
    const double r = std::sqrt(
        numeric_limit([fval](int n) { return n * fval(n) * fval(n); }));
    const double rd = std::sqrt(
        numeric_limit([fval](int n) { return n / (fval(n) * fval(n)); }));
    NonlinearityFunction f(
        "hydrogen",
        [fval](int n) { return std::complex<double>(fval(n), 0.0); }, r, rd);
    return {std::move(s), std::move(f)};
}

std::pair<SpectrumModel, NonlinearityFunction> poschl_teller(double lambda,
                                                             double kappa) {
    if (!(lambda > 1.0) || !(kappa > 1.0)) {
        throw ConfigError("poschl-teller requires lambda > 1 and kappa > 1");
    }
    const double c = lambda + kappa;
    SpectrumModel s("poschl-teller", [c](int n) { return n * (n + c); });
    const double r =
        std::sqrt(numeric_limit([c](int n) { return n * (n + c); }));
    const double rd =
        std::sqrt(numeric_limit([c](int n) { return n / (n + c); }));
    NonlinearityFunction f(
        "poschl-teller",
        [c](int n) { return std::complex<double>(std::sqrt(n + c), 0.0); }, r,
        rd);
    return {std::move(s), std::move(f)};
}

NonlinearityFunction combined_nonlinearity(const NonlinearityFunction& f) {
    if (!f.is_real()) {
        throw ConfigError("combined_nonlinearity requires a real positive f");
    }
    // log(1 + ([f(n)]!)^2), stable for both tiny and huge factorials
    auto log1p_fact_sq = [f](int n) {
        return log1p_exp(2.0 * f.factorial(n).log_mag);
    };
    return NonlinearityFunction(
        f.name() + "-s1",
        [f, log1p_fact_sq](int n) -> std::complex<double> {
            if (n == 0) return f.value(0);
            const double log_ratio = log1p_fact_sq(n - 1) - log1p_fact_sq(n);
            return std::exp(log_ratio) * f.value(n);
        },
        // The ratio of the 1+([f]!)^2 factors tends to 1 whenever [f(n)]!
        // tends to 0 or infinity, so f_s1 shares f's asymptotics and the
        // combination converges on the smaller of the two disks.
        std::min(f.domain_radius(), f.dual_domain_radius()),
        std::min(f.domain_radius(), f.dual_domain_radius()));
}

LogComplex gk_combination_kernel(const SpectrumModel& s, double gamma, int n) {
    const LogComplex original = LogComplex::from_polar(
        std::lgamma(n + 1.0), -gamma * s.energy(n));
    const LogComplex dual =
        LogComplex::from_polar(s.log_rho(n), -gamma * s.epsilon(n));
    return original + dual;
}

NonlinearityFunction gk_combined_nonlinearity(const SpectrumModel& s,
                                              double gamma) {
    if (gamma == 0.0) throw ConfigError("gamma must be nonzero for GK states");
    const double radius = std::min(s.gk_radius(), s.gk_dual_radius());
    return NonlinearityFunction(
        s.name() + "-gk-s1",
        [s, gamma](int n) -> std::complex<double> {
            if (n == 0) return 1.0;
            const LogComplex num = gk_combination_kernel(s, gamma, n - 1);
            const LogComplex den = gk_combination_kernel(s, gamma, n);
            if (den.is_zero()) {
                throw DomainError("K(n,gamma) vanished at n = " +
                                  std::to_string(n));
            }
            return (num / den).value();
        },
        radius, radius);
}

std::vector<double> deformed_spectrum(const NonlinearityFunction& f,
                                      int n_max) {
    std::vector<double> e(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        e[n] = n * std::norm(f.value(n));
    }
    return e;
}

NonlinearityFunction tabulated_nonlinearity(
    std::string name, const std::vector<double>& values) {
    if (values.empty()) throw ConfigError("tabulated f must be nonempty");
    for (double v : values) {
        if (!(v > 0.0)) throw ConfigError("tabulated f must be positive");
    }
    const int last = static_cast<int>(values.size());
    // No analytic tail: take the limit from the last tabulated entries.
    auto nf2 = [&values, last](int n) {
        const int k = std::min(n, last);
        return k * values[k - 1] * values[k - 1];
    };
    const double r = std::sqrt(numeric_limit(nf2));
    auto inv = [nf2](int n) {
        const double v = nf2(n);
        return v == 0.0 ? kInf : double(n) * double(n) / v;
    };
    const double rd = std::sqrt(numeric_limit(inv));
    return NonlinearityFunction(
        std::move(name),
        [values, last](int n) -> std::complex<double> {
            // Past the table the last entry repeats, matching the
            // constant-tail limit used for the domain radii above.
            return values[std::min(std::max(n, 1), last) - 1];
        },
        r, rd);
}

ModelEntry lookup_model(const std::string& name, double lambda, double kappa) {
    if (name == "identity") {
        SpectrumModel linear("linear", [](int n) { return double(n); });
        return ModelEntry{std::move(linear), identity_nonlinearity()};
    }
    if (name == "hydrogen") {
        auto [s, f] = hydrogen_like();
        return ModelEntry{std::move(s), std::move(f)};
    }
    if (name == "poschl-teller") {
        auto [s, f] = poschl_teller(lambda, kappa);
        return ModelEntry{std::move(s), std::move(f)};
    }
    // Anything else is a path to {"f": [f(1), f(2), ...]}.
    std::ifstream in(name);
    if (!in) throw ConfigError("unknown model or unreadable file: " + name);
    nlohmann::json j;
    in >> j;
    if (!j.contains("f") || !j["f"].is_array()) {
        throw ConfigError("tabulated model file must contain an \"f\" array");
    }
    std::vector<double> values = j["f"].get<std::vector<double>>();
    return ModelEntry{std::nullopt,
                      tabulated_nonlinearity(name, values)};
}

}  // namespace nlcs
