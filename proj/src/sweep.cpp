#include "nlcs/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "nlcs/errors.hpp"

namespace nlcs {

double Grid::at(int i) const {
    if (steps < 2) throw ConfigError("grid needs steps >= 2");
    return min + (max - min) * double(i) / double(steps - 1);
}

namespace {

nlohmann::json grid_to_json(const Grid& g) {
    return {{"min", g.min}, {"max", g.max}, {"steps", g.steps}};
}

Grid grid_from_json(const nlohmann::json& j) {
    Grid g{j.at("min").get<double>(), j.at("max").get<double>(),
           j.at("steps").get<int>()};
    if (g.steps < 2) throw ConfigError("grid needs steps >= 2");
    return g;
}

const std::vector<StateKind> kHydrogenKinds = {
    StateKind::Nlcs, StateKind::Dual, StateKind::CombinationS1,
    StateKind::SuperpositionS2};

const std::vector<StateKind> kGkKinds = {
    StateKind::Gk, StateKind::GkDual, StateKind::GkCombinationS1};

}  // namespace

nlohmann::json SweepConfig::to_json() const {
    nlohmann::json kinds_json = nlohmann::json::array();
    for (StateKind k : kinds) kinds_json.push_back(to_string(k));
    nlohmann::json j{{"name", name},
                     {"model", model},
                     {"kinds", kinds_json},
                     {"amplitude", grid_to_json(amplitude)},
                     {"trunc_tol", trunc_tol},
                     {"output_dir", output_dir},
                     {"format", format}};
    if (model == "poschl-teller") {
        j["lambda"] = lambda;
        j["kappa"] = kappa;
    }
    if (gamma_grid) {
        j["gamma_grid"] = grid_to_json(*gamma_grid);
    } else if (std::any_of(kinds.begin(), kinds.end(), is_gk_kind)) {
        j["gamma"] = gamma;
    }
    return j;
}

SweepConfig SweepConfig::from_json(const nlohmann::json& j) {
    SweepConfig c;
    c.name = j.value("name", std::string("sweep"));
    c.model = j.at("model").get<std::string>();
    c.lambda = j.value("lambda", 4.0);
    c.kappa = j.value("kappa", 4.0);
    for (const auto& k : j.at("kinds")) {
        c.kinds.push_back(state_kind_from_string(k.get<std::string>()));
    }
    c.amplitude = grid_from_json(j.at("amplitude"));
    if (j.contains("gamma_grid")) c.gamma_grid = grid_from_json(j["gamma_grid"]);
    c.gamma = j.value("gamma", 0.5);
    c.trunc_tol = j.value("trunc_tol", kDefaultTruncTol);
    c.output_dir = j.value("output_dir", std::string("."));
    c.format = j.value("format", std::string("csv"));
    if (c.format != "csv" && c.format != "json") {
        throw ConfigError("format must be csv or json");
    }
    return c;
}

SweepConfig preset(const std::string& name) {
    SweepConfig c;
    c.name = name;
    if (name == "fig1" || name == "fig2" || name == "fig3") {
        c.model = "hydrogen";
        c.kinds = kHydrogenKinds;
        c.amplitude = {0.01, 0.95, 200};
        return c;
    }
    if (name == "fig4") {
        c.model = "poschl-teller";
        c.kinds = kGkKinds;
        c.amplitude = {0.05, 0.9, 200};
        c.gamma = 0.5;
        return c;
    }
    if (name == "fig5" || name == "fig6") {
        c.model = "poschl-teller";
        c.kinds = kGkKinds;
        c.amplitude = {0.1, 0.9, 80};
        // stop short of 2*pi: gamma*e_n mod 2*pi collapses toward the
        // excluded gamma = 0 point there for the integer PT spectrum
        c.gamma_grid = Grid{0.1, 4.9, 80};
        return c;
    }
    throw ConfigError("unknown preset: " + name + " (expected fig1..fig6)");
}

std::vector<SweepRow> run_sweep_kind(const SweepConfig& config,
                                     StateKind kind) {
    std::vector<double> gammas;
    if (config.gamma_grid) {
        for (int i = 0; i < config.gamma_grid->steps; ++i) {
            gammas.push_back(config.gamma_grid->at(i));
        }
    } else {
        gammas.push_back(is_gk_kind(kind) ? config.gamma : 0.0);
    }

    std::vector<SweepRow> rows;
    rows.reserve(config.amplitude.steps * gammas.size());
    for (int i = 0; i < config.amplitude.steps; ++i) {
        const double amp = config.amplitude.at(i);
        for (double gamma : gammas) {
            SweepRow row;
            row.amplitude = amp;
            row.gamma = gamma;
            try {
                StateSpec spec;
                spec.kind = kind;
                spec.model = config.model;
                spec.alpha = amp;
                spec.gamma = gamma;
                spec.lambda = config.lambda;
                spec.kappa = config.kappa;
                const BuiltState built = build_state(spec, config.trunc_tol);
                row.report = evaluate(moments_oracle(built.state));
                row.valid = true;
            } catch (const DomainError& e) {
                row.error = e.what();
            } catch (const TruncationError& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::string rows_to_csv(const std::vector<SweepRow>& rows,
                        const std::string& source) {
    std::string out = "amplitude,gamma,g2,I1,I2,I3,I4,mean_n,source,error\n";
    for (const SweepRow& row : rows) {
        out += fmt(row.amplitude) + "," + fmt(row.gamma) + ",";
        if (row.valid) {
            const NonclassicalityReport& r = row.report;
            out += fmt(r.g2) + "," + fmt(r.I1) + "," + fmt(r.I2) + "," +
                   fmt(r.I3) + "," + fmt(r.I4) + "," + fmt(r.mean_n) + "," +
                   source + ",";
        } else {
            out += "nan,nan,nan,nan,nan,nan," + source + ",";
            out += row.error;
        }
        out += "\n";
    }
    return out;
}

std::vector<std::string> run_figure_sweep(const SweepConfig& config) {
    namespace fs = std::filesystem;
    fs::create_directories(config.output_dir);
    std::vector<std::string> written;
    for (StateKind kind : config.kinds) {
        const auto rows = run_sweep_kind(config, kind);
        const fs::path path = fs::path(config.output_dir) /
                              (config.name + "_" + to_string(kind) +
                               (config.format == "json" ? ".json" : ".csv"));
        std::ofstream out(path);
        if (!out) throw ConfigError("cannot write " + path.string());
        if (config.format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const SweepRow& row : rows) {
                nlohmann::json item{{"amplitude", row.amplitude},
                                    {"gamma", row.gamma},
                                    {"valid", row.valid}};
                if (row.valid) {
                    item["g2"] = row.report.g2;
                    item["I1"] = row.report.I1;
                    item["I2"] = row.report.I2;
                    item["I3"] = row.report.I3;
                    item["I4"] = row.report.I4;
                    item["mean_n"] = row.report.mean_n;
                } else {
                    item["error"] = row.error;
                }
                j.push_back(std::move(item));
            }
            out << j.dump(2) << "\n";
        } else {
            out << rows_to_csv(rows, "oracle");
        }
        written.push_back(path.string());
    }
    const fs::path sidecar =
        fs::path(config.output_dir) / (config.name + "_config.json");
    std::ofstream side(sidecar);
    side << config.to_json().dump(2) << "\n";
    written.push_back(sidecar.string());
    return written;
}

namespace {

struct CheckAccumulator {
    std::vector<VerifyCheck> checks;

    void add(const std::string& family, double worst, double bound) {
        checks.push_back({family, worst <= bound, worst, bound});
    }
};

double rel_dev(std::complex<double> a, std::complex<double> b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale < 1.0) return std::abs(a - b);  // absolute floor below 1
    return std::abs(a - b) / scale;
}

double moment_set_dev(const MomentSet& a, const MomentSet& b) {
    double worst = 0.0;
    worst = std::max(worst, rel_dev(a.a, b.a));
    worst = std::max(worst, rel_dev(a.a2, b.a2));
    worst = std::max(worst, rel_dev(a.a4, b.a4));
    worst = std::max(worst, rel_dev(a.n, b.n));
    worst = std::max(worst, rel_dev(a.n2corr, b.n2corr));
    worst = std::max(worst, rel_dev(a.a2ad2, b.a2ad2));
    return worst;
}

}  // namespace

std::vector<VerifyCheck> run_verify(const std::string& model, double lambda,
                                    double kappa) {
    CheckAccumulator acc;
    const ModelEntry entry = lookup_model(model, lambda, kappa);
    const NonlinearityFunction& f = entry.f;

    acc.add("commutator [A,B+]=[B,A+]=1 (interior block)",
            canonical_commutator_check(f, 32), 1e-10);

    {  // telescoping: [f_s1(n)]! (1 + ([f(n)]!)^2) = 2 [f(n)]!
        const NonlinearityFunction fs1 = combined_nonlinearity(f);
        double worst = 0.0;
        for (int n = 0; n <= 100; ++n) {
            const double lhs = fs1.factorial(n).log_mag +
                               std::log1p(std::exp(
                                   2.0 * f.factorial(n).log_mag));
            const double rhs = std::log(2.0) + f.factorial(n).log_mag;
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        acc.add("telescoping [f_s1(n)]! identity (log-space, n <= 100)", worst,
                1e-10);
    }

    if (entry.spectrum) {  // n f(n)^2 reproduces the generating spectrum
        double worst = 0.0;
        for (int n = 0; n <= 64; ++n) {
            const double en = entry.spectrum->energy(n);
            const double nf2 = n * std::norm(f.value(n));
            const double scale = std::max(std::abs(en), 1.0);
            worst = std::max(worst, std::abs(en - nf2) / scale);
        }
        acc.add("spectrum duality e_n = n f(n)^2", worst, 1e-12);
    }

    const double r =
        std::min(f.domain_radius(), f.dual_domain_radius());
    const double amp = std::isfinite(r) ? 0.45 * r : 0.8;

    {  // double entry: closed-form vs oracle for s1 and s2
        StateSpec spec;
        spec.model = model;
        spec.alpha = amp;
        spec.lambda = lambda;
        spec.kappa = kappa;
        double worst = 0.0;
        for (StateKind kind :
             {StateKind::CombinationS1, StateKind::SuperpositionS2}) {
            spec.kind = kind;
            const MomentSet closed = moments_closed_form(spec);
            const MomentSet oracle = moments_oracle(build_state(spec).state);
            worst = std::max(worst, moment_set_dev(closed, oracle));
        }
        acc.add("double entry s1/s2 closed-form vs oracle", worst, 1e-8);
    }

    {  // overlap closed form vs oracle inner product (dual pair)
        StateSpec spec;
        spec.kind = StateKind::Nlcs;
        spec.model = model;
        spec.alpha = amp;
        spec.lambda = lambda;
        spec.kappa = kappa;
        const std::complex<double> closed = overlap_closed_form(spec);
        const BuiltState a = build_state(spec);
        spec.kind = StateKind::Dual;
        const BuiltState b = build_state(spec);
        acc.add("dual-pair overlap closed form vs inner product",
                std::abs(closed - a.state.inner(b.state)), 1e-10);
    }

    if (entry.spectrum) {
        const double gz =
            std::min(entry.spectrum->gk_radius(),
                     entry.spectrum->gk_dual_radius());
        const double z = std::isfinite(gz) ? 0.45 * gz : 0.8;
        const double gamma = 0.5;

        StateSpec spec;
        spec.model = model;
        spec.alpha = z;
        spec.gamma = gamma;
        spec.lambda = lambda;
        spec.kappa = kappa;

        spec.kind = StateKind::GkCombinationS1;
        const MomentSet closed = moments_closed_form(spec);
        const MomentSet oracle = moments_oracle(build_state(spec).state);
        acc.add("double entry gk-s1 closed-form vs oracle",
                moment_set_dev(closed, oracle), 1e-8);

        spec.kind = StateKind::Gk;
        const std::complex<double> ov = overlap_closed_form(spec);
        const BuiltState a = build_state(spec);
        spec.kind = StateKind::GkDual;
        const BuiltState b = build_state(spec);
        acc.add("gk dual-pair overlap closed form vs inner product",
                std::abs(ov - a.state.inner(b.state)), 1e-10);
    }

    {  // bosonic reordering and Heisenberg floor across all kinds
        double worst_reorder = 0.0;
        double worst_floor = 0.0;
        std::vector<StateKind> kinds = {StateKind::Nlcs, StateKind::Dual,
                                        StateKind::CombinationS1,
                                        StateKind::SuperpositionS2};
        if (entry.spectrum) {
            kinds.insert(kinds.end(), kGkKinds.begin(), kGkKinds.end());
        }
        for (StateKind kind : kinds) {
            StateSpec spec;
            spec.kind = kind;
            spec.model = model;
            spec.gamma = 0.5;
            spec.lambda = lambda;
            spec.kappa = kappa;
            if (is_gk_kind(kind)) {
                const double gz = std::min(entry.spectrum->gk_radius(),
                                           entry.spectrum->gk_dual_radius());
                spec.alpha = std::isfinite(gz) ? 0.45 * gz : 0.8;
            } else {
                spec.alpha = amp;
            }
            const MomentSet m = moments_oracle(build_state(spec).state);
            worst_reorder =
                std::max(worst_reorder,
                         std::abs(m.a2ad2 - m.n2corr - 4.0 * m.n - 2.0));
            const auto [vx, vy] = quadrature_variances(evaluate(m));
            worst_floor = std::max(worst_floor, 1.0 / 16.0 - vx * vy);
        }
        acc.add("bosonic reordering a^2 a+^2 = a+^2 a^2 + 4n + 2",
                worst_reorder, 1e-9);
        acc.add("Heisenberg floor Vx Vy >= 1/16", worst_floor, 1e-12);
    }

    if (model == "identity") {  // canonical saturation of every family
        double worst = 0.0;
        for (StateKind kind :
             {StateKind::Nlcs, StateKind::Dual, StateKind::CombinationS1,
              StateKind::SuperpositionS2, StateKind::Gk, StateKind::GkDual,
              StateKind::GkCombinationS1}) {
            StateSpec spec;
            spec.kind = kind;
            spec.model = model;
            spec.alpha = 0.5;
            spec.gamma = 0.5;
            const NonclassicalityReport r =
                evaluate(moments_oracle(build_state(spec).state));
            worst = std::max({worst, std::abs(r.g2 - 1.0), std::abs(r.I1),
                              std::abs(r.I2), std::abs(r.I3), std::abs(r.I4)});
        }
        acc.add("canonical-CS saturation (g2 = 1, I1..I4 = 0)", worst, 1e-10);
    }

    return acc.checks;
}

}  // namespace nlcs
