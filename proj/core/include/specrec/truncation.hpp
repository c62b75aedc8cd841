#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "specrec/coefficients.hpp"

namespace specrec {

/// The exact worst-case recovery error of truncation at level n, split into
/// its two sources: the cut tail and the amplified data noise.
struct TruncationErrorBreakdown {
    Index n = 0;
    double tail_term = 0.0;   // sup_{k >= n} mu_k / xi_k
    double noise_term = 0.0;  // delta * mu_{n-1}
    double total = 0.0;       // sqrt(tail^2 + noise^2); exact, not a bound
};

/// Pick n as the smallest index with xi_n >= 1/delta (clamped to >= 1).
struct ThresholdRule {};

/// Pick n minimizing the exact worst-case error over 1 <= n <= n_max
/// (smallest minimizer wins). n_max defaults to threshold index + 8: no
/// order improvement is available beyond the threshold.
struct MinimizeBound {
    std::optional<Index> n_max;
};

/// Pick the smallest n with xi_n >= constant / delta. With constant = 1 this
/// reproduces the threshold rule; other constants probe the sensitivity of
/// the order-matched choice.
struct MatchedDecay {
    double constant = 1.0;
};

using SelectionStrategy = std::variant<ThresholdRule, MinimizeBound, MatchedDecay>;

/// First n entries of the observed coefficients (zeros where unsupported).
/// n = 0 is rejected: the method is undefined without at least one entry.
std::vector<double> info_map(const CoefficientVector& f_delta, Index n);

/// Applies the operator to an information vector: entry k becomes mu_k * x_k.
CoefficientVector reconstruct(const SpectralProblem& problem,
                              const std::vector<double>& x);

/// reconstruct(info_map(...)): the truncated spectral reconstruction of Af
/// from the noisy coefficients.
CoefficientVector apply_truncation(const SpectralProblem& problem,
                                   const NoisyObservation& obs, Index n);

/// Exact worst-case error of truncation at level n over the unit smoothness
/// ball and all delta-perturbations.
TruncationErrorBreakdown worst_case_error(const SpectralProblem& problem,
                                          double delta, Index n);

/// Truncation level chosen by the given strategy (always >= 1).
Index select_n(const SpectralProblem& problem, double delta,
               const SelectionStrategy& strategy);

}  // namespace specrec
