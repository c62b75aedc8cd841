#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "specrec/applications.hpp"
#include "specrec/error_theory.hpp"

using namespace specrec;

namespace {

SpectralProblem geometric_problem(double mu_base, double xi_base, Index horizon = 64) {
    return SpectralProblem(Sequence(GeneralForm{1.0, 0.0, std::log(mu_base), 1.0}),
                           Sequence(GeneralForm{1.0, 0.0, std::log(xi_base), 1.0}),
                           RatioCertificate{0, 1}, horizon);
}

std::vector<double> decade_grid(int from_exp, int to_exp) {
    std::vector<double> out;
    for (int j = from_exp; j <= to_exp; ++j) out.push_back(std::pow(10.0, -j));
    return out;
}

}  // namespace

TEST_CASE("information-free lower bound is the ratio at the threshold") {
    const auto geo = geometric_problem(2.0, 8.0);
    CHECK(lower_bound(geo, 0.1) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(lower_bound(geo, 2.0) == doctest::Approx(geo.ratio(0)));

    const auto ex1 = numdiff_problem(4.0, 256);
    CHECK(lower_bound(ex1, 0.1) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("fixed-n lower bound takes the prefix minimum into account") {
    const auto geo = geometric_problem(2.0, 8.0);
    CHECK(lower_bound_at(geo, 0.1, 1) == doctest::Approx(0.25).epsilon(1e-14));

    // monotone prefix: at n >= threshold the bound is the threshold ratio
    CHECK(lower_bound_at(geo, 0.1, 5) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(lower_bound_at(geo, 0.1, 2) == doctest::Approx(0.0625).epsilon(1e-14));

    // non-monotone prefix: the dip enters the maximum
    std::vector<double> log_mu{std::log(1.0), std::log(0.5), std::log(0.7)};
    std::vector<double> log_xi{0.0, 0.0, 0.0};
    SpectralProblem dip(Sequence(Tabulated{log_mu, 0.5}), Sequence(Tabulated{log_xi, 1.0}),
                        RatioCertificate{2, 1}, 16);
    const Index threshold = dip.threshold_index(0.2);  // 1/delta = 5
    CHECK(lower_bound_at(dip, 0.2, 2) ==
          doctest::Approx(std::max(dip.ratio(threshold), 0.5)).epsilon(1e-12));
}

TEST_CASE("optimality constant on the differentiation family") {
    const auto ex1 = numdiff_problem(4.0, 256);
    CHECK(optimality_constant(ex1, 0.1) == doctest::Approx(std::sqrt(17.0)).epsilon(1e-12));
    CHECK_THROWS_AS((void)optimality_constant(ex1, 2.0), std::domain_error);  // threshold 0
}

TEST_CASE("optimality constant from the ratio step") {
    SpectralProblem constant_step(Sequence(GeneralForm{1.0, 0.0, std::log(2.0), 1.0}),
                                  Sequence(GeneralForm{1.0, 0.0, std::log(4.0), 1.0}),
                                  RatioCertificate{0, 1}, 64);
    // inner = (xi_N/mu_N)*(mu_{N-1}/xi_{N-1}) = ratio(N-1)/ratio(N) = 2
    CHECK(optimality_constant(constant_step, 0.1) ==
          doctest::Approx(std::sqrt(1.0 + 4.0)).epsilon(1e-12));

    // backward heat at t = T with no polynomial smoothness: the inner ratio
    // collapses to 1 and the constant to sqrt(2)
    HeatProblem hp;
    hp.gamma = 1.0;
    hp.t = 1.0;
    hp.T = 1.0;
    hp.s = 0.0;
    const auto heat = heat_spectral_problem(hp, 64);
    CHECK(optimality_constant(heat, 1e-3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("optimality constant stays bounded over the decade sweep") {
    const auto ex1 = numdiff_problem(4.0, 4096);
    const auto deltas = decade_grid(1, 8);
    const double worst = optimality_constant_max(ex1, deltas);
    CHECK(worst <= 4.2);
    CHECK(worst == doctest::Approx(std::sqrt(17.0)).epsilon(1e-12));
}

TEST_CASE("sandwich report chains lower, truncation error, and constant") {
    const auto ex1 = numdiff_problem(4.0, 1024);
    const auto report = sandwich(ex1, 0.1, ex1.threshold_index(0.1));
    CHECK(report.threshold == 2);
    CHECK(report.lower_any_n == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(report.upper_truncation == doctest::Approx(std::hypot(0.25, 0.1)).epsilon(1e-14));
    CHECK(report.lower_any_n <= report.lower_at_n);
    CHECK(report.lower_at_n <= report.upper_truncation);
    CHECK(report.ratio_upper_to_lower >= 1.0);
    CHECK(report.upper_truncation <= report.optimality_constant * report.lower_any_n);
    CHECK(report.flags.count(OptimalityFlag::AtThresholdConstant) == 1);
    CHECK(report.flags.count(OptimalityFlag::OptimalChain) == 1);
}

TEST_CASE("sandwich flags the small-n and large-n regimes") {
    const auto ex1 = numdiff_problem(4.0, 1024);
    const double delta = 1e-4;
    const Index threshold = ex1.threshold_index(delta);

    const auto below = sandwich(ex1, delta, threshold - 2);
    CHECK(below.flags.count(OptimalityFlag::BelowThresholdSharp) == 1);
    CHECK(below.flags.count(OptimalityFlag::AtThresholdConstant) == 0);

    const auto above = sandwich(ex1, delta, threshold + 3);
    CHECK(above.flags.count(OptimalityFlag::AboveThresholdNoGain) == 1);
}

TEST_CASE("sandwich flags the noise-matched sharp bound") {
    const auto ex1 = numdiff_problem(4.0, 1024);
    const double delta = std::exp(-ex1.log_xi(6));  // exactly 1/xi_6
    const auto report = sandwich(ex1, delta, ex1.threshold_index(delta));
    CHECK(report.flags.count(OptimalityFlag::SmallDeltaSharp) == 1);
    CHECK(report.upper_truncation <=
          std::sqrt(2.0) * lower_bound(ex1, delta) * (1.0 + 1e-12));
}

TEST_CASE("fixed-n lower bound never exceeds the truncation error") {
    const auto problems = {numdiff_problem(4.0, 2048), geometric_problem(2.0, 8.0, 2048)};
    for (const auto& p : problems) {
        for (const double delta : decade_grid(1, 6)) {
            for (Index n = 1; n <= 20; ++n) {
                CHECK(lower_bound_at(p, delta, n) <=
                      worst_case_error(p, delta, n).total * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("under monotone decay the error formula collapses to two terms") {
    const auto p = numdiff_problem(4.0, 2048);
    for (const double delta : decade_grid(1, 6)) {
        for (Index n = 1; n <= 24; ++n) {
            const double expected =
                std::hypot(std::exp(std::log(delta) + p.log_mu(n - 1)), p.ratio(n));
            CHECK(worst_case_error(p, delta, n).total ==
                  doctest::Approx(expected).epsilon(1e-13));
        }
    }
}

TEST_CASE("matched window finds indices for slow growth and reports gaps for fast") {
    SpectralProblem slow(Sequence(Power{1.0}), Sequence(GeneralForm{1.0, 0.0, 1.0, 0.5}),
                         RatioCertificate{4, 1}, 1 << 15);
    for (const double delta : decade_grid(1, 8)) {
        CHECK_FALSE(matched_window(slow, delta).empty());
    }

    SpectralProblem fast(Sequence(Power{1.0}), Sequence(GeneralForm{1.0, 0.0, 5.0, 1.0}),
                         RatioCertificate{0, 1}, 4096);
    CHECK_FALSE(matched_window(fast, 1e-2).empty());
    CHECK(matched_window(fast, 1e-4).empty());
    const auto rows = matched_regime_sweep(fast, decade_grid(3, 8));
    for (const auto& row : rows) {
        CHECK_FALSE(row.n.has_value());
        CHECK(std::isnan(row.ratio_upper_to_lower));
    }
}

TEST_CASE("matched regime keeps the truncation error within a fixed factor") {
    SpectralProblem power_xi(Sequence(Power{2.0}), Sequence(GeneralForm{1.0, 4.0, 0.0, 1.0}),
                             RatioCertificate{0, 1}, 1 << 15);
    SpectralProblem subexp_xi(Sequence(Power{1.0}),
                              Sequence(GeneralForm{1.0, 0.0, 1.0, 0.5}),
                              RatioCertificate{4, 1}, 1 << 15);
    for (const auto& p : {power_xi, subexp_xi}) {
        for (const auto& row : matched_regime_sweep(p, decade_grid(1, 8))) {
            REQUIRE(row.n.has_value());
            CHECK(row.ratio_upper_to_lower <= 10.0);
        }
    }
}
