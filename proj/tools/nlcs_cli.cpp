// Command-line front end: figure sweeps, invariant verification, and
// single-state inspection.
//
// Exit codes: 0 success, 1 a physics check failed or a state was
// rejected (domain/truncation), 2 bad configuration or usage.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nlcs/errors.hpp"
#include "nlcs/fock_core.hpp"
#include "nlcs/nonclassicality.hpp"
#include "nlcs/states.hpp"
#include "nlcs/sweep.hpp"

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nlcs::ConfigError("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

int cmd_sweep(const std::string& preset_name, const std::string& config_path,
              const std::string& output_dir, const std::string& format) {
    nlcs::SweepConfig config;
    if (!preset_name.empty()) {
        config = nlcs::preset(preset_name);
    } else {
        config = nlcs::SweepConfig::from_json(load_json(config_path));
    }
    if (!output_dir.empty()) config.output_dir = output_dir;
    if (!format.empty()) config.format = format;
    for (const std::string& path : nlcs::run_figure_sweep(config)) {
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& models, double lambda,
               double kappa) {
    bool all_pass = true;
    for (const std::string& model : models) {
        for (const nlcs::VerifyCheck& check :
             nlcs::run_verify(model, lambda, kappa)) {
            std::printf("[%s] %-55s  worst %.3e  bound %.1e  model=%s\n",
                        check.pass ? "PASS" : "FAIL", check.family.c_str(),
                        check.worst, check.bound, model.c_str());
            all_pass = all_pass && check.pass;
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_state(const std::string& spec_path, bool dump_coeffs, double tol) {
    const nlcs::StateSpec spec =
        nlcs::StateSpec::from_json(load_json(spec_path));
    const nlcs::BuiltState built = nlcs::build_state(spec, tol);
    const nlcs::NonclassicalityReport report =
        nlcs::evaluate(nlcs::moments_oracle(built.state));

    nlohmann::json out{{"spec", spec.to_json()},
                       {"dim", built.state.dim()},
                       {"tail_bound", built.state.tail_bound()},
                       {"norm_constant", built.norm_constant},
                       {"g2", report.g2},
                       {"I1", report.I1},
                       {"I2", report.I2},
                       {"I3", report.I3},
                       {"I4", report.I4},
                       {"mean_n", report.mean_n}};
    if (spec.kind == nlcs::StateKind::CombinationS1) {
        out["c1"] = built.c1;
        out["c2"] = built.c2;
    }
    if (dump_coeffs) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (int n = 0; n < built.state.dim(); ++n) {
            const std::complex<double> c = built.state.coeff(n);
            coeffs.push_back({c.real(), c.imag()});
        }
        out["coeffs"] = std::move(coeffs);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlinear coherent state toolkit"};
    app.require_subcommand(1);

    std::string preset_name, config_path, output_dir, format;
    auto* sweep = app.add_subcommand("sweep", "run a figure sweep");
    auto* preset_opt =
        sweep->add_option("--preset", preset_name, "preset name fig1..fig6");
    sweep->add_option("--config", config_path, "sweep config JSON file")
        ->excludes(preset_opt);
    sweep->add_option("--output-dir", output_dir, "override output directory");
    sweep->add_option("--format", format, "csv or json");

    std::vector<std::string> models = {"identity", "hydrogen",
                                       "poschl-teller"};
    double lambda = 4.0, kappa = 4.0;
    auto* verify = app.add_subcommand("verify", "run invariant checks");
    verify->add_option("--model", models,
                       "model names (default: all built-ins)");
    verify->add_option("--lambda", lambda, "Poschl-Teller lambda");
    verify->add_option("--kappa", kappa, "Poschl-Teller kappa");

    std::string spec_path;
    bool dump_coeffs = false;
    double tol = nlcs::kDefaultTruncTol;
    auto* state = app.add_subcommand("state", "build and inspect one state");
    state->add_option("--spec", spec_path, "state spec JSON file")->required();
    state->add_flag("--dump-coeffs", dump_coeffs,
                    "include Fock coefficients in the output");
    state->add_option("--tol", tol, "truncation tail tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            if (preset_name.empty() && config_path.empty()) {
                std::cerr << "sweep needs --preset or --config\n";
                return 2;
            }
            return cmd_sweep(preset_name, config_path, output_dir, format);
        }
        if (verify->parsed()) return cmd_verify(models, lambda, kappa);
        if (state->parsed()) return cmd_state(spec_path, dump_coeffs, tol);
    } catch (const nlcs::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlcs::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const nlcs::TruncationError& e) {
        std::cerr << "truncation error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
