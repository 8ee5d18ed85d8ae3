#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nlcs/errors.hpp"
#include "nlcs/sweep.hpp"

using namespace nlcs;

TEST_CASE("grid endpoints and spacing") {
    const Grid g{0.1, 0.9, 5};
    CHECK(g.at(0) == doctest::Approx(0.1));
    CHECK(g.at(4) == doctest::Approx(0.9));
    CHECK(g.at(2) == doctest::Approx(0.5));
    CHECK_THROWS_AS((Grid{0.0, 1.0, 1}.at(0)), ConfigError);
}

TEST_CASE("presets cover all six figures") {
    for (const char* name :
         {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"}) {
        const SweepConfig c = preset(name);
        CHECK(c.name == name);
        CHECK_FALSE(c.kinds.empty());
        CHECK(c.amplitude.steps >= 2);
    }
    CHECK(preset("fig1").model == "hydrogen");
    CHECK(preset("fig1").kinds.size() == 4);
    CHECK(preset("fig4").model == "poschl-teller");
    CHECK(preset("fig4").kinds.size() == 3);
    CHECK(preset("fig5").gamma_grid.has_value());
    CHECK(preset("fig6").gamma_grid.has_value());
    CHECK_THROWS_AS(preset("fig7"), ConfigError);
}

TEST_CASE("sweep config JSON round-trip") {
    SweepConfig c = preset("fig5");
    c.output_dir = "/tmp/somewhere";
    c.format = "json";
    const SweepConfig back = SweepConfig::from_json(c.to_json());
    CHECK(back.name == c.name);
    CHECK(back.model == c.model);
    CHECK(back.kinds == c.kinds);
    CHECK(back.amplitude.min == c.amplitude.min);
    CHECK(back.amplitude.max == c.amplitude.max);
    CHECK(back.amplitude.steps == c.amplitude.steps);
    REQUIRE(back.gamma_grid.has_value());
    CHECK(back.gamma_grid->steps == c.gamma_grid->steps);
    CHECK(back.output_dir == c.output_dir);
    CHECK(back.format == c.format);
}

TEST_CASE("minimal two-point sweep") {
    SweepConfig c;
    c.model = "hydrogen";
    c.kinds = {StateKind::Nlcs};
    c.amplitude = {0.1, 0.5, 2};
    const auto rows = run_sweep_kind(c, StateKind::Nlcs);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].valid);
    CHECK(rows[1].valid);
    CHECK(rows[0].amplitude == doctest::Approx(0.1));
    CHECK(rows[1].amplitude == doctest::Approx(0.5));
}

TEST_CASE("out-of-domain grid points become invalid rows, not aborts") {
    SweepConfig c;
    c.model = "hydrogen";
    c.amplitude = {0.9, 1.5, 3};  // last two points exceed the unit radius
    const auto rows = run_sweep_kind(c, StateKind::Nlcs);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].valid);
    CHECK_FALSE(rows[1].valid);
    CHECK_FALSE(rows[2].valid);
    CHECK_FALSE(rows[2].error.empty());

    const std::string csv = rows_to_csv(rows, "oracle");
    CHECK(csv.find("nan") != std::string::npos);
}

TEST_CASE("identical configs give byte-identical CSV") {
    SweepConfig c;
    c.model = "hydrogen";
    c.amplitude = {0.05, 0.6, 8};
    const std::string a =
        rows_to_csv(run_sweep_kind(c, StateKind::Dual), "oracle");
    const std::string b =
        rows_to_csv(run_sweep_kind(c, StateKind::Dual), "oracle");
    CHECK(a == b);
    CHECK(a.substr(0, a.find('\n')) ==
          "amplitude,gamma,g2,I1,I2,I3,I4,mean_n,source,error");
}

TEST_CASE("figure sweep writes one table per kind plus a config sidecar") {
    SweepConfig c;
    c.name = "mini";
    c.model = "hydrogen";
    c.kinds = {StateKind::Nlcs, StateKind::Dual};
    c.amplitude = {0.1, 0.5, 2};
    c.output_dir =
        (std::filesystem::temp_directory_path() / "nlcs_sweep_test").string();
    std::filesystem::remove_all(c.output_dir);

    const auto written = run_figure_sweep(c);
    REQUIRE(written.size() == 3);
    for (const auto& path : written) {
        CHECK(std::filesystem::exists(path));
    }
    std::ifstream side(written.back());
    nlohmann::json j;
    side >> j;
    CHECK(j["name"] == "mini");
    CHECK(j["kinds"].size() == 2);
    std::filesystem::remove_all(c.output_dir);
}

TEST_CASE("verify suite passes on every built-in model") {
    for (const char* model : {"identity", "hydrogen", "poschl-teller"}) {
        for (const VerifyCheck& check : run_verify(model)) {
            INFO(model, ": ", check.family, " worst=", check.worst);
            CHECK(check.pass);
        }
    }
}
