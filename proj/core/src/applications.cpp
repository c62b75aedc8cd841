#include "specrec/applications.hpp"

#include <cmath>
#include <stdexcept>

#include "rng_util.hpp"

namespace specrec {

namespace {

RecoveryReport make_report(const SpectralProblem& problem, double delta, Index n) {
    RecoveryReport report;
    report.n = n;
    report.n_clamped = problem.threshold_index(delta) == 0 && n == 1;
    report.no_decay =
        problem.log_ratio(problem.horizon()) >= problem.log_ratio(0) - 1e-12;
    report.error = worst_case_error(problem, delta, n);
    report.bounds = sandwich(problem, delta, n);
    return report;
}

}  // namespace

SpectralProblem numdiff_problem(double gamma, Index horizon) {
    if (!(gamma > 2.0)) {
        throw std::invalid_argument(
            "differentiation needs smoothness exponent gamma > 2");
    }
    // Within an eigenvalue pair the ratio always decreases; across pair
    // boundaries it decreases for gamma >= 4 but can tick up for smaller
    // gamma, where only every second step is certified.
    const RatioCertificate cert{0, gamma >= 4.0 ? Index{1} : Index{2}};
    return SpectralProblem(Sequence(PowerPaired{2.0}), Sequence(Power{gamma}), cert,
                           horizon);
}

SpectralProblem heat_spectral_problem(const HeatProblem& hp, Index horizon) {
    if (!(hp.gamma > 0.0 && hp.gamma <= 1.0)) {
        throw std::invalid_argument("heat problem needs gamma in (0, 1]");
    }
    if (!(hp.T > 0.0)) throw std::invalid_argument("heat problem needs T > 0");
    if (!(hp.t >= 0.0 && hp.t <= hp.T)) {
        throw std::invalid_argument("heat problem needs 0 <= t <= T");
    }
    if (!(hp.s >= 0.0)) throw std::invalid_argument("heat problem needs s >= 0");

    const RatioCertificate cert{0, 1};  // k^{-s} exp(-lambda_k (T-t)) never increases
    if (hp.lambda) {
        Sequence mu(ExpOfLambda{hp.lambda, hp.t});
        const double s = hp.s;
        const double T = hp.T;
        const auto lam = hp.lambda;
        Sequence xi(ExpOfLambda{
            [s, T, lam](Index k) {
                const double kbar = static_cast<double>(k < 1 ? 1 : k);
                return s * std::log(kbar) + lam(k) * T;
            },
            1.0});
        return SpectralProblem(std::move(mu), std::move(xi), cert, horizon);
    }
    Sequence mu(GeneralForm{1.0, 0.0, hp.t, hp.gamma});
    Sequence xi(GeneralForm{1.0, hp.s, hp.T, hp.gamma});
    return SpectralProblem(std::move(mu), std::move(xi), cert, horizon);
}

DifferentiateResult differentiate_coeffs(const NoisyObservation& obs, double gamma,
                                         const SelectionStrategy& strategy,
                                         Index horizon, Index n_samples) {
    const SpectralProblem problem = numdiff_problem(gamma, horizon);
    const Index n = select_n(problem, obs.delta, strategy);
    DifferentiateResult result;
    result.coeffs = apply_truncation(problem, obs, n);
    result.derivative = synthesize(result.coeffs, n_samples);
    result.report = make_report(problem, obs.delta, n);
    return result;
}

DifferentiateResult differentiate(const GridFunction& noisy_samples, double delta,
                                  double gamma, const SelectionStrategy& strategy,
                                  Index horizon) {
    if (horizon == 0) {
        horizon = std::max<Index>(1024, noisy_samples.size());
    }
    const NoisyObservation obs(analyze(noisy_samples), delta);
    const SpectralProblem problem = numdiff_problem(gamma, horizon);
    const Index n = select_n(problem, delta, strategy);
    DifferentiateResult result;
    result.coeffs = apply_truncation(problem, obs, n);
    result.derivative = synthesize_on(result.coeffs, noisy_samples);
    result.report = make_report(problem, delta, n);
    return result;
}

BackwardHeatResult solve_backward(const HeatProblem& hp, const NoisyObservation& obs,
                                  const SelectionStrategy& strategy, Index horizon) {
    const SpectralProblem problem = heat_spectral_problem(hp, horizon);
    const Index n = select_n(problem, obs.delta, strategy);
    BackwardHeatResult result;
    result.u_t = apply_truncation(problem, obs, n);
    result.report = make_report(problem, obs.delta, n);
    return result;
}

CoefficientVector propagate_forward(const HeatProblem& hp, const CoefficientVector& u0,
                                    Index horizon) {
    const SpectralProblem problem = heat_spectral_problem(hp, horizon);
    CoefficientVector out;
    for (const auto& [k, v] : u0.entries()) {
        out.set(k, v * std::exp(problem.log_mu(k)));
    }
    return out;
}

NoisySignal add_white_noise(const GridFunction& clean, double sigma, std::uint64_t seed) {
    std::mt19937_64 rng(detail::mix_seed(seed, 0));
    GridFunction noise = clean;
    for (auto& s : noise.samples) s = sigma * detail::standard_normal(rng);
    NoisySignal out;
    out.samples = clean;
    for (Index j = 0; j < clean.size(); ++j) out.samples.samples[j] += noise.samples[j];
    out.realized_delta = h_norm(analyze(noise));
    return out;
}

}  // namespace specrec
