#pragma once

#include <cstdint>
#include <functional>

#include "specrec/adversary.hpp"
#include "specrec/error_theory.hpp"
#include "specrec/fourier.hpp"

namespace specrec {

/// Everything a caller needs to judge one recovery run: the chosen level,
/// the exact worst-case error split, and the optimality bounds around it.
struct RecoveryReport {
    Index n = 0;
    bool n_clamped = false;   // threshold was 0 and was clamped to 1
    bool no_decay = false;    // ratio does not decay (degenerate smoothness)
    TruncationErrorBreakdown error;
    SandwichReport bounds;
};

/// Spectral problem of periodic numerical differentiation (-f''): paired
/// squared frequencies against the smoothness weights max(1,k)^gamma.
/// Requires gamma > 2. The ratio certificate is period-1 from 0 for
/// gamma >= 4 and period-2 from 0 for 2 < gamma < 4 (within a pair the
/// ratio can dip and recover when gamma < 4).
SpectralProblem numdiff_problem(double gamma, Index horizon);

/// Backward parabolic data: recover u(t) from noisy u(0) when du/dt = L u,
/// L with eigenvalues lambda_k. Defaults give lambda_k = k^gamma.
/// smoothness s enters the weights xi_k = max(1,k)^s * exp(lambda_k * T).
struct HeatProblem {
    double gamma = 1.0;       // lambda exponent, in (0, 1]
    double t = 0.0;           // recovery time, 0 <= t <= T
    double T = 1.0;
    double s = 0.0;           // smoothness exponent
    std::function<double(Index)> lambda;  // optional override of k^gamma
};

/// The induced spectral problem mu_k = exp(lambda_k t),
/// xi_k = max(1,k)^s exp(lambda_k T), with the ratio certificate set from 0.
/// With the default lambda the sequences are structural (closed-form rules);
/// a custom lambda yields opaque rules with reduced certifiability.
SpectralProblem heat_spectral_problem(const HeatProblem& hp, Index horizon);

struct DifferentiateResult {
    GridFunction derivative;   // estimate of -f'' on the input grid
    CoefficientVector coeffs;  // the same estimate in the eigenbasis
    RecoveryReport report;
};

/// Recovers -f'' from noisy samples of f. delta is the coefficient-space
/// noise radius. Requires gamma > 2.
DifferentiateResult differentiate(const GridFunction& noisy_samples, double delta,
                                  double gamma, const SelectionStrategy& strategy,
                                  Index horizon = 0);

/// Same front-end for data already in coefficient form.
DifferentiateResult differentiate_coeffs(const NoisyObservation& obs, double gamma,
                                         const SelectionStrategy& strategy,
                                         Index horizon, Index n_samples);

struct BackwardHeatResult {
    CoefficientVector u_t;     // recovered coefficients of u(t)
    RecoveryReport report;
};

/// Recovers u(t) from the noisy coefficients of u(0).
BackwardHeatResult solve_backward(const HeatProblem& hp, const NoisyObservation& obs,
                                  const SelectionStrategy& strategy, Index horizon);

/// Propagates coefficients of u(0) forward to time t (exact semigroup
/// action), for round-trip checks and fixture construction.
CoefficientVector propagate_forward(const HeatProblem& hp, const CoefficientVector& u0,
                                    Index horizon);

/// Additive white noise scaled to a target sample-domain sigma; reports the
/// realized coefficient-space radius as delta.
struct NoisySignal {
    GridFunction samples;
    double realized_delta = 0.0;
};
NoisySignal add_white_noise(const GridFunction& clean, double sigma, std::uint64_t seed);

}  // namespace specrec
