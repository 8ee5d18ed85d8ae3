#ifndef NLCS_SWEEP_HPP
#define NLCS_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nlcs/nonclassicality.hpp"
#include "nlcs/states.hpp"

namespace nlcs {

struct Grid {
    double min = 0.0;
    double max = 0.0;
    int steps = 2;

    double at(int i) const;
};

struct SweepConfig {
    std::string name = "sweep";
    std::string model = "identity";
    double lambda = 4.0;
    double kappa = 4.0;
    std::vector<StateKind> kinds;
    Grid amplitude;
    std::optional<Grid> gamma_grid;  // 2-D (z, gamma) sweeps
    double gamma = 0.5;              // fixed gamma for 1-D GK sweeps
    double trunc_tol = kDefaultTruncTol;
    std::string output_dir = ".";
    std::string format = "csv";

    nlohmann::json to_json() const;
    static SweepConfig from_json(const nlohmann::json& j);
};

/// Presets fig1..fig6 covering the six figure datasets.
SweepConfig preset(const std::string& name);

struct SweepRow {
    double amplitude = 0.0;
    double gamma = 0.0;
    bool valid = false;
    NonclassicalityReport report;
    std::string error;  // set when the grid point was rejected
};

/// Evaluates one state kind over the config's grid(s); rejected points
/// come back as invalid rows, never as aborts. Deterministic ordering.
std::vector<SweepRow> run_sweep_kind(const SweepConfig& config,
                                     StateKind kind);

/// Renders rows to CSV text: header plus one row per grid point, with
/// nan in the value columns of rejected points.
std::string rows_to_csv(const std::vector<SweepRow>& rows,
                        const std::string& source);

/// Runs all kinds, writes one table per kind plus a JSON sidecar with
/// the full config. Returns the written file names.
std::vector<std::string> run_figure_sweep(const SweepConfig& config);

struct VerifyCheck {
    std::string family;
    bool pass = false;
    double worst = 0.0;
    double bound = 0.0;
};

/// Double-entry oracle suite plus invariant checks for one model.
std::vector<VerifyCheck> run_verify(const std::string& model,
                                    double lambda = 4.0, double kappa = 4.0);

}  // namespace nlcs

#endif
