#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "specrec/adversary.hpp"
#include "specrec/applications.hpp"
#include "random_problems.hpp"

using namespace specrec;

namespace {

SpectralProblem geometric_problem(double mu_base, double xi_base, Index horizon = 64) {
    return SpectralProblem(Sequence(GeneralForm{1.0, 0.0, std::log(mu_base), 1.0}),
                           Sequence(GeneralForm{1.0, 0.0, std::log(xi_base), 1.0}),
                           RatioCertificate{0, 1}, horizon);
}

}  // namespace

TEST_CASE("extremal source lives on the unit sphere of the smoothness ball") {
    const auto geo = geometric_problem(2.0, 8.0);
    const auto inst = extremal_source(geo, 0.1);
    CHECK(inst.f.support_size() == 1);
    CHECK(inst.f.get(2) == doctest::Approx(1.0 / 64.0).epsilon(1e-14));
    CHECK(inst.f_delta.empty());
    CHECK(w_norm(geo, inst.f) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(h_norm(inst.f) <= 0.1);  // the zero observation is feasible
}

TEST_CASE("extremal source error matches the information-free lower bound") {
    const auto problems = {geometric_problem(2.0, 8.0), numdiff_problem(4.0, 512)};
    for (const auto& p : problems) {
        for (const double delta : {0.3, 1e-2, 1e-4}) {
            const auto inst = extremal_source(p, delta);
            for (const Index n : {Index{1}, Index{3}, Index{9}}) {
                CHECK(empirical_error(p, inst, n) ==
                      doctest::Approx(lower_bound(p, delta)).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("extremal pair attains the worst-case formula") {
    const auto geo = geometric_problem(2.0, 8.0);
    const auto inst = extremal_pair(geo, 0.1, 2);
    CHECK(inst.f.get(2) == doctest::Approx(1.0 / 64.0).epsilon(1e-14));
    CHECK(inst.f_delta.get(2) == doctest::Approx(1.0 / 64.0).epsilon(1e-14));
    CHECK(inst.f_delta.get(1) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(h_norm(inst.f - inst.f_delta) == doctest::Approx(0.1).epsilon(1e-14));

    const double err = empirical_error(geo, inst, 2);
    CHECK(err == doctest::Approx(std::hypot(0.0625, 0.2)).epsilon(1e-13));
    CHECK(err == doctest::Approx(worst_case_error(geo, 0.1, 2).total).epsilon(1e-13));
}

TEST_CASE("extremal pair places mass on the smallest tail maximizer") {
    // ratios 1.0, 0.5, 0.7, 0.3...: at n = 1 the maximizer sits at index 2
    std::vector<double> log_mu{std::log(1.0), std::log(0.5), std::log(0.7), std::log(0.3)};
    std::vector<double> log_xi{0.0, 0.0, 0.0, 0.0};
    SpectralProblem dip(Sequence(Tabulated{log_mu, std::nullopt}),
                        Sequence(Tabulated{log_xi, std::nullopt}), RatioCertificate{3, 1},
                        3);
    const auto inst = extremal_pair(dip, 0.05, 1);
    CHECK(inst.f.support_size() == 1);
    CHECK(inst.f.get(2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("empirical error on simple instances") {
    const auto geo = geometric_problem(2.0, 8.0);

    AttackInstance clean;  // supported below n, observed exactly
    clean.f.set(1, 0.125);
    clean.f_delta = clean.f;
    CHECK(empirical_error(geo, clean, 3) == 0.0);

    AttackInstance tail_only;  // pure tail error gives the ratio
    tail_only.f.set(4, std::exp(-geo.log_xi(4)));
    tail_only.f_delta = tail_only.f;
    CHECK(empirical_error(geo, tail_only, 4) == doctest::Approx(geo.ratio(4)).epsilon(1e-13));
}

TEST_CASE("one-hot enumeration equals the closed error formula") {
    const auto geo = geometric_problem(2.0, 8.0);
    const auto oracle = brute_force_worst_case(geo, 0.1, 2, 10);
    CHECK(oracle.value == doctest::Approx(std::hypot(0.0625, 0.2)).epsilon(1e-13));
    CHECK(oracle.tail_index == 2);
    CHECK(oracle.noise_index == 1);
    CHECK(empirical_error(geo, oracle.witness, 2) ==
          doctest::Approx(oracle.value).epsilon(1e-13));
    CHECK_THROWS_AS((void)brute_force_worst_case(geo, 0.1, 5, 3), std::invalid_argument);
}

TEST_CASE("with negligible noise the oracle reduces to the tail maximum") {
    const auto geo = geometric_problem(2.0, 8.0);
    const auto oracle = brute_force_worst_case(geo, 1e-14, 1, 30);
    CHECK(oracle.value == doctest::Approx(geo.ratio(1)).epsilon(1e-10));
}

TEST_CASE("oracle agrees with the formula on randomized problems") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto c = testsupport::random_tabulated_case(seed);
        const double formula = worst_case_error(c.problem, c.delta, c.n).total;
        const auto oracle =
            brute_force_worst_case(c.problem, c.delta, c.n, c.problem.horizon(), 64, seed);
        CHECK(std::abs(oracle.value - formula) <= 1e-12 * formula);
        CHECK(empirical_error(c.problem, extremal_pair(c.problem, c.delta, c.n), c.n) ==
              doctest::Approx(formula).epsilon(1e-12));
    }
}

TEST_CASE("random attacks are reproducible and feasible") {
    const auto p = numdiff_problem(4.0, 512);
    const auto a = random_attack(p, 1e-2, 4, 200, 42);
    const auto b = random_attack(p, 1e-2, 4, 200, 42);
    CHECK(a == b);
    CHECK(random_attack(p, 1e-2, 4, 0, 42).empty());

    for (const auto& inst : random_attack_instances(p, 1e-2, 4, 200, 42)) {
        CHECK(w_norm(p, inst.f) <= 1.0 + 1e-12);
        CHECK(h_norm(inst.f - inst.f_delta) <= 1e-2 * (1.0 + 1e-12));
    }
}

TEST_CASE("no random attack beats the worst-case formula") {
    const auto p = numdiff_problem(4.0, 512);
    for (const double delta : {0.1, 1e-3}) {
        const Index n = std::max<Index>(1, p.threshold_index(delta));
        const double total = worst_case_error(p, delta, n).total;
        const auto errors = random_attack(p, delta, n, 10000, 7);
        const double worst = *std::max_element(errors.begin(), errors.end());
        CHECK(worst <= total * (1.0 + 1e-12));
        CHECK(worst > 0.0);
    }
}

TEST_CASE("attack verdict passes honestly and fails when tampered") {
    const auto geo = geometric_problem(2.0, 8.0);
    const auto honest = attack_verdict(geo, 0.1, 2, 2000, 11);
    CHECK(honest.pass);
    CHECK(honest.oracle_gap <= 1e-12);
    CHECK(honest.attainment_gap <= 1e-12);
    CHECK(honest.random_max <= honest.formula_total * (1.0 + 1e-12));

    // Negative controls: a formula off by 1% in either direction must fail.
    CHECK_FALSE(attack_verdict(geo, 0.1, 2, 2000, 11, 1e-12, 1.01).pass);
    CHECK_FALSE(attack_verdict(geo, 0.1, 2, 2000, 11, 1e-12, 0.99).pass);
}
