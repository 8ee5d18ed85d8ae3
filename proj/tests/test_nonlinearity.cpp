#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>

#include "nlcs/errors.hpp"
#include "nlcs/nonlinearity.hpp"
#include "nlcs/states.hpp"

using namespace nlcs;

TEST_CASE("hydrogen-like nonlinearity values and factorial") {
    auto [spectrum, f] = hydrogen_like();
    CHECK(std::abs(f.value(1)) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    // [f(2)]! = (sqrt(3)/2)(2/3) = 1/sqrt(3)
    CHECK(std::exp(f.factorial(2).log_mag) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(f.factorial(0).log_mag == 0.0);  // [f(0)]! == 1
    CHECK(f.domain_radius() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::isinf(f.dual_domain_radius()));
    CHECK(f.is_real());
}

TEST_CASE("factorial recurrence [f(n)]! = [f(n-1)]! f(n)") {
    auto [spectrum, f] = hydrogen_like();
    for (int n = 1; n <= 40; ++n) {
        const double lhs = f.factorial(n).log_mag;
        const double rhs =
            f.factorial(n - 1).log_mag + std::log(std::abs(f.value(n)));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("poschl-teller spectrum companions at lambda=kappa=4") {
    auto [s, f] = poschl_teller(4.0, 4.0);
    CHECK(s.energy(1) == doctest::Approx(9.0));
    CHECK(s.energy(2) == doctest::Approx(20.0));
    CHECK(std::exp(s.log_rho(2)) == doctest::Approx(180.0).epsilon(1e-12));
    CHECK(s.epsilon(2) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(s.epsilon(0) == 0.0);
    CHECK(std::exp(s.log_mu(2)) ==
          doctest::Approx(4.0 / 180.0).epsilon(1e-12));
    CHECK(std::abs(f.value(3)) ==
          doctest::Approx(std::sqrt(11.0)).epsilon(1e-14));
    CHECK(std::isinf(f.domain_radius()));  // n f(n)^2 = n(n+8) diverges
    CHECK(s.gk_dual_radius() == doctest::Approx(1.0).epsilon(1e-5));
    CHECK_THROWS_AS(poschl_teller(0.5, 4.0), ConfigError);
}

TEST_CASE("spectrum model validates e_0 = 0 and monotonicity") {
    CHECK_THROWS_AS(SpectrumModel("bad", [](int) { return 1.0; }),
                    ConfigError);
    CHECK_THROWS_AS(SpectrumModel("bad2",
                                  [](int n) {
                                      return n < 3 ? double(n) : 3.0 - n;
                                  }),
                    ConfigError);
}

TEST_CASE("numeric limit rule") {
    CHECK(numeric_limit([](int n) { return n * (n + 2.0) / ((n + 1.0) *
                                                            (n + 1.0)); }) ==
          doctest::Approx(1.0).epsilon(1e-4));
    CHECK(std::isinf(numeric_limit([](int n) { return double(n); })));
}

TEST_CASE("combined nonlinearity f_s1") {
    const NonlinearityFunction one = identity_nonlinearity();
    const NonlinearityFunction one_s1 = combined_nonlinearity(one);
    for (int n = 1; n <= 20; ++n) {
        CHECK(std::abs(one_s1.value(n) - 1.0) < 1e-14);
    }

    auto [spectrum, f] = hydrogen_like();
    const NonlinearityFunction fs1 = combined_nonlinearity(f);
    // f_s1(1) = (1+1)/(1+3/4) * sqrt(3)/2 = (8/7) sqrt(3)/2
    CHECK(std::abs(fs1.value(1)) ==
          doctest::Approx((8.0 / 7.0) * std::sqrt(3.0) / 2.0).epsilon(1e-12));

    // telescoping: [f_s1(n)]! = 2 [f(n)]! / (1 + ([f(n)]!)^2)
    for (int n = 0; n <= 100; ++n) {
        const double expected =
            std::log(2.0) + f.factorial(n).log_mag -
            std::log1p(std::exp(2.0 * f.factorial(n).log_mag));
        CHECK(std::abs(fs1.factorial(n).log_mag - expected) < 1e-10);
    }
}

TEST_CASE("coefficient-ratio rule recovers f_s1 from the combination state") {
    auto [spectrum, f] = hydrogen_like();
    const NonlinearityFunction fs1 = combined_nonlinearity(f);
    const BuiltState s1 = build_combination_s1(f, 0.4);
    // f(n) = C_{n-1} / (sqrt(n) C_n) with C_n including alpha^n: the
    // alpha factors contribute alpha itself, so divide it back out.
    for (int n = 1; n <= 20; ++n) {
        const std::complex<double> ratio =
            s1.state.coeff(n - 1) /
            (std::sqrt(double(n)) * s1.state.coeff(n)) * 0.4;
        CHECK(std::abs(ratio - fs1.value(n)) < 1e-10);
    }
}

TEST_CASE("GK combination kernel K(n,gamma)") {
    auto [s, f] = poschl_teller(4.0, 4.0);
    for (double gamma : {0.0, 0.5, 2.0, 6.0}) {
        CHECK(std::abs(gk_combination_kernel(s, gamma, 0).value() - 2.0) <
              1e-14);
    }
    // direct complex arithmetic oracle for n = 1, gamma = 0.5
    const std::complex<double> k1 =
        std::polar(1.0, -0.5 * s.energy(1)) +
        9.0 * std::polar(1.0, -0.5 * s.epsilon(1));
    CHECK(std::abs(gk_combination_kernel(s, 0.5, 1).value() - k1) < 1e-12);

    const NonlinearityFunction fgk = gk_combined_nonlinearity(s, 0.5);
    CHECK(std::abs(fgk.value(1)) ==
          doctest::Approx(2.0 / std::abs(k1)).epsilon(1e-12));
    CHECK_FALSE(fgk.is_real());
}

TEST_CASE("linear spectrum is self-dual") {
    SpectrumModel linear("linear", [](int n) { return double(n); });
    for (int n = 0; n <= 30; ++n) {
        CHECK(linear.epsilon(n) == doctest::Approx(double(n)).epsilon(1e-14));
        CHECK(linear.log_mu(n) ==
              doctest::Approx(std::lgamma(n + 1.0)).epsilon(1e-12));
        CHECK(linear.log_rho(n) ==
              doctest::Approx(std::lgamma(n + 1.0)).epsilon(1e-12));
    }
    // K(n,gamma) = 2 n! e^{-i gamma n}, so the kernel ratio collapses to
    // e^{i gamma}/n
    const NonlinearityFunction fgk = gk_combined_nonlinearity(linear, 0.7);
    for (int n = 1; n <= 20; ++n) {
        CHECK(std::abs(fgk.value(n) - std::polar(1.0 / n, 0.7)) < 1e-12);
    }
}

TEST_CASE("deformed spectrum e_n = n f(n)^2") {
    auto [sh, fh] = hydrogen_like();
    const auto eh = deformed_spectrum(fh, 16);
    for (int n = 0; n <= 16; ++n) {
        CHECK(std::abs(eh[n] - (1.0 - 1.0 / ((n + 1.0) * (n + 1.0)))) <
              1e-14);
        CHECK(std::abs(eh[n] - sh.energy(n)) < 1e-14);
    }
    const auto e1 = deformed_spectrum(identity_nonlinearity(), 8);
    for (int n = 0; n <= 8; ++n) CHECK(e1[n] == doctest::Approx(double(n)));
    auto [sp, fp] = poschl_teller(4.0, 4.0);
    const auto ep = deformed_spectrum(fp, 8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(std::abs(ep[n] - n * (n + 8.0)) < 1e-11);
    }
}

TEST_CASE("inverse nonlinearity swaps domains and handles f(0) = 0") {
    auto [spectrum, f] = hydrogen_like();
    const NonlinearityFunction inv = f.inverse();
    CHECK(std::abs(inv.value(2) - 1.0 / f.value(2)) < 1e-14);
    CHECK(std::isinf(inv.domain_radius()));
    CHECK(inv.dual_domain_radius() == doctest::Approx(1.0).epsilon(1e-6));

    // harmonious-type f(n) = sqrt(n): f(0) = 0, yet 1/f must stay usable
    NonlinearityFunction harmonious(
        "harmonious", [](int n) { return std::sqrt(double(n)); },
        std::sqrt(numeric_limit([](int n) { return double(n) * n; })), 1.0);
    const NonlinearityFunction hinv = harmonious.inverse();
    CHECK(hinv.value(0) == std::complex<double>(0.0, 0.0));
    CHECK(std::abs(hinv.value(3) - 1.0 / std::sqrt(3.0)) < 1e-14);
}

TEST_CASE("model registry lookup") {
    CHECK(lookup_model("identity").f.name() == "identity");
    CHECK(lookup_model("hydrogen").spectrum.has_value());
    const ModelEntry pt = lookup_model("poschl-teller", 4.0, 4.0);
    REQUIRE(pt.spectrum.has_value());
    CHECK(pt.spectrum->energy(1) == doctest::Approx(9.0));
    CHECK_THROWS_AS(lookup_model("no-such-model"), ConfigError);
}

TEST_CASE("model registry loads tabulated f from a JSON file") {
    const std::string path = "/tmp/nlcs_test_table.json";
    {
        std::ofstream out(path);
        out << R"({"f": [0.5, 2.0, 1.5]})";
    }
    const ModelEntry entry = lookup_model(path);
    CHECK_FALSE(entry.spectrum.has_value());
    CHECK(entry.f.value(2) == std::complex<double>(2.0, 0.0));
    std::remove(path.c_str());
}

TEST_CASE("tabulated nonlinearity") {
    const NonlinearityFunction f =
        tabulated_nonlinearity("table", {0.5, 2.0, 1.5});
    CHECK(f.value(1) == std::complex<double>(0.5, 0.0));
    CHECK(std::exp(f.factorial(3).log_mag) ==
          doctest::Approx(0.5 * 2.0 * 1.5).epsilon(1e-12));
    CHECK(f.value(4) == std::complex<double>(1.5, 0.0));  // tail repeats
    CHECK_THROWS_AS(tabulated_nonlinearity("neg", {1.0, -1.0}), ConfigError);
}
