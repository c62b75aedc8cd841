#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "specrec/applications.hpp"
#include "specrec/coefficients.hpp"

using namespace specrec;

TEST_CASE("plain norm is Euclidean over the support") {
    CoefficientVector v{{0, 3.0}, {2, 4.0}};
    CHECK(h_norm(v) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(h_norm(CoefficientVector{}) == 0.0);
}

TEST_CASE("weighted norm of a one-hot inverse weight is one") {
    SpectralProblem p(Sequence(Power{2.0}), Sequence(Power{4.0}), RatioCertificate{0, 1},
                      64);
    const Index threshold = p.threshold_index(0.1);
    CoefficientVector v;
    v.set(threshold, std::exp(-p.log_xi(threshold)));
    CHECK(w_norm(p, v) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w_norm(p, CoefficientVector{}) == 0.0);
}

TEST_CASE("weighted norm survives astronomically large weights") {
    SpectralProblem p(Sequence(GeneralForm{1.0, 0.0, 1.0, 1.0}),
                      Sequence(GeneralForm{1.0, 0.0, 7.0, 1.0}), RatioCertificate{0, 1},
                      128);
    CoefficientVector v;
    v.set(100, std::exp(-p.log_xi(100)));  // weight e^700
    CHECK(w_norm(p, v) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entry arithmetic keeps the support sparse") {
    CoefficientVector v;
    v.set(3, 1.5);
    v.add(3, -1.5);
    CHECK(v.empty());
    v.set(1, 2.0);
    v.set(4, -1.0);
    const CoefficientVector w{{1, 0.5}};
    const auto diff = v - w;
    CHECK(diff.get(1) == doctest::Approx(1.5));
    CHECK(diff.get(4) == doctest::Approx(-1.0));
    CHECK(diff.support_size() == 2);
    const auto scaled = v.scaled(2.0);
    CHECK(scaled.get(4) == doctest::Approx(-2.0));
    CHECK(v.max_index() == 4);
}

TEST_CASE("explicit zeros are dropped on construction") {
    CoefficientVector v{{0, 0.0}, {2, 1.0}};
    CHECK(v.support_size() == 1);
    CHECK(v.get(0) == 0.0);
}

TEST_CASE("observations require a positive noise radius") {
    CHECK_THROWS_AS(NoisyObservation(CoefficientVector{}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(NoisyObservation(CoefficientVector{}, -0.1), std::invalid_argument);
    const NoisyObservation obs(CoefficientVector{{0, 1.0}}, 0.5);
    CHECK(obs.delta == 0.5);
}
