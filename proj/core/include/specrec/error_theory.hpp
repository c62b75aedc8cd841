#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "specrec/truncation.hpp"

namespace specrec {

/// Named optimality facts, set on a report when both the hypothesis held and
/// the inequality was verified numerically.
enum class OptimalityFlag {
    BelowThresholdSharp,    // n < threshold: error <= sqrt(2) * ratio(n)
    AtThresholdConstant,    // n = threshold: error <= K * lower bound
    AboveThresholdNoGain,   // n > threshold: error >= error(threshold)/sqrt(2)
    OptimalChain,           // lower <= error(threshold) <= paired-ratio bound
    SmallDeltaSharp,        // delta <= c/xi_threshold: error <= sqrt(1+c^2) * ratio
    MatchedWindowRegime,    // n sits in the order-matched window [c'/delta, c''/delta]
};

/// Lower and upper bounds around the truncation error at one (delta, n),
/// with the optimality constant and every verified flag.
struct SandwichReport {
    double delta = 0.0;
    Index n = 0;
    Index threshold = 0;            // smallest N with xi_N >= 1/delta
    double lower_any_n = 0.0;       // bound for the best possible n
    double lower_at_n = 0.0;        // bound at this n
    double upper_truncation = 0.0;  // exact truncation error
    double optimality_constant = 0.0;  // NaN when threshold == 0
    double ratio_upper_to_lower = 0.0;
    bool matched_window_empty = false;
    std::set<OptimalityFlag> flags;
};

/// Lower bound on the recovery error achievable by any amount of continuous
/// information: ratio at the threshold index.
double lower_bound(const SpectralProblem& problem, double delta);

/// Lower bound when exactly n functionals are used:
/// max{ lower_bound, min_{0 <= k <= n} ratio(k) }.
double lower_bound_at(const SpectralProblem& problem, double delta, Index n);

/// K = sqrt(1 + ((xi_N / mu_N) * (mu_{N-1} / xi_{N-1}))^2) at N = threshold.
/// The factor by which truncation at the threshold can exceed the lower
/// bound. Throws std::domain_error when the threshold is 0 (no N-1 exists).
double optimality_constant(const SpectralProblem& problem, double delta);

/// Largest optimality constant across a delta grid (finite by inspection on
/// the grid; boundedness over all delta is not machine-checkable).
double optimality_constant_max(const SpectralProblem& problem,
                               std::span<const double> deltas);

/// Indices n with c_lo/delta <= xi_n <= c_hi/delta. Possibly empty: for
/// rapidly growing xi the window can fall between consecutive indices.
std::vector<Index> matched_window(const SpectralProblem& problem, double delta,
                                  double c_lo = 0.5, double c_hi = 2.0);

/// Assembles all bounds at (delta, n) and flags every optimality fact whose
/// hypothesis holds and whose inequality verified. small_delta_c is the
/// constant c >= 1 of the small-delta sharp bound.
SandwichReport sandwich(const SpectralProblem& problem, double delta, Index n,
                        double small_delta_c = 1.0);

/// One row of the order-matched regime sweep.
struct RegimeRow {
    double delta = 0.0;
    std::optional<Index> n;         // nullopt when the window is empty
    double ratio_upper_to_lower = 0.0;  // NaN when the window is empty
};

/// For each delta: pick the smallest index in the matched window and record
/// the upper/lower ratio there. Empty windows are reported, not errors.
std::vector<RegimeRow> matched_regime_sweep(const SpectralProblem& problem,
                                            std::span<const double> deltas,
                                            double c_lo = 0.5, double c_hi = 2.0);

}  // namespace specrec
