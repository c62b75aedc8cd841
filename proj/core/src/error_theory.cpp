#include "specrec/error_theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace specrec {

namespace {
constexpr double kRelSlack = 1e-12;

bool leq_with_slack(double a, double b) {
    return a <= b * (1.0 + kRelSlack) + std::numeric_limits<double>::min();
}
}  // namespace

double lower_bound(const SpectralProblem& problem, double delta) {
    return problem.ratio(problem.threshold_index(delta));
}

double lower_bound_at(const SpectralProblem& problem, double delta, Index n) {
    double prefix_min = std::numeric_limits<double>::infinity();
    for (Index k = 0; k <= n; ++k) {
        prefix_min = std::min(prefix_min, problem.log_ratio(k));
    }
    return std::max(lower_bound(problem, delta), std::exp(prefix_min));
}

double optimality_constant(const SpectralProblem& problem, double delta) {
    const Index threshold = problem.threshold_index(delta);
    if (threshold == 0) {
        throw std::domain_error(
            "optimality constant needs a positive threshold index (delta too large)");
    }
    const double log_inner = problem.log_xi(threshold) - problem.log_mu(threshold) +
                             problem.log_mu(threshold - 1) - problem.log_xi(threshold - 1);
    const double inner = std::exp(log_inner);
    return std::sqrt(1.0 + inner * inner);
}

double optimality_constant_max(const SpectralProblem& problem,
                               std::span<const double> deltas) {
    double worst = 0.0;
    for (const double delta : deltas) {
        worst = std::max(worst, optimality_constant(problem, delta));
    }
    return worst;
}

std::vector<Index> matched_window(const SpectralProblem& problem, double delta,
                                  double c_lo, double c_hi) {
    if (!(c_lo > 0.0 && c_hi >= c_lo)) {
        throw std::invalid_argument("matched window needs 0 < c_lo <= c_hi");
    }
    const double lo = std::log(c_lo) - std::log(delta);
    const double hi = std::log(c_hi) - std::log(delta);
    std::vector<Index> out;
    for (Index n = 1; n <= problem.horizon(); ++n) {
        const double lx = problem.log_xi(n);
        if (lx > hi) break;  // xi is nondecreasing
        if (lx >= lo) out.push_back(n);
    }
    return out;
}

SandwichReport sandwich(const SpectralProblem& problem, double delta, Index n,
                        double small_delta_c) {
    if (n < 1) throw std::invalid_argument("sandwich needs n >= 1");
    if (!(small_delta_c >= 1.0)) {
        throw std::invalid_argument("small-delta constant must be >= 1");
    }

    SandwichReport report;
    report.delta = delta;
    report.n = n;
    report.threshold = problem.threshold_index(delta);
    report.lower_any_n = lower_bound(problem, delta);
    report.lower_at_n = lower_bound_at(problem, delta, n);
    report.upper_truncation = worst_case_error(problem, delta, n).total;
    report.ratio_upper_to_lower = report.upper_truncation / report.lower_at_n;
    report.optimality_constant = std::numeric_limits<double>::quiet_NaN();
    report.matched_window_empty = matched_window(problem, delta).empty();

    const bool monotone = problem.ratio_monotone_from_zero();
    const Index threshold = report.threshold;
    const double total = report.upper_truncation;

    if (monotone && n < threshold) {
        if (leq_with_slack(total, std::sqrt(2.0) * problem.ratio(n))) {
            report.flags.insert(OptimalityFlag::BelowThresholdSharp);
        }
    }
    if (threshold >= 1) {
        report.optimality_constant = optimality_constant(problem, delta);
        if (monotone && n == threshold) {
            if (leq_with_slack(total, report.optimality_constant * report.lower_any_n)) {
                report.flags.insert(OptimalityFlag::AtThresholdConstant);
            }
            const double paired_upper = std::hypot(problem.ratio(threshold),
                                                   problem.ratio(threshold - 1));
            if (leq_with_slack(report.lower_any_n, total) &&
                leq_with_slack(total, paired_upper)) {
                report.flags.insert(OptimalityFlag::OptimalChain);
            }
        }
        if (monotone && n > threshold) {
            const double at_threshold = worst_case_error(problem, delta, threshold).total;
            if (leq_with_slack(at_threshold / std::sqrt(2.0), total)) {
                report.flags.insert(OptimalityFlag::AboveThresholdNoGain);
            }
        }
        if (monotone && n == threshold &&
            std::log(delta) <= std::log(small_delta_c) - problem.log_xi(threshold) + kRelSlack) {
            const double sharp = std::sqrt(1.0 + small_delta_c * small_delta_c) *
                                 problem.ratio(threshold);
            if (leq_with_slack(total, sharp)) {
                report.flags.insert(OptimalityFlag::SmallDeltaSharp);
            }
        }
    }
    if (!report.matched_window_empty) {
        const auto window = matched_window(problem, delta);
        if (std::find(window.begin(), window.end(), n) != window.end()) {
            report.flags.insert(OptimalityFlag::MatchedWindowRegime);
        }
    }
    return report;
}

std::vector<RegimeRow> matched_regime_sweep(const SpectralProblem& problem,
                                            std::span<const double> deltas,
                                            double c_lo, double c_hi) {
    std::vector<RegimeRow> rows;
    rows.reserve(deltas.size());
    for (const double delta : deltas) {
        RegimeRow row;
        row.delta = delta;
        row.ratio_upper_to_lower = std::numeric_limits<double>::quiet_NaN();
        const auto window = matched_window(problem, delta, c_lo, c_hi);
        if (!window.empty()) {
            row.n = window.front();
            const double total = worst_case_error(problem, delta, *row.n).total;
            row.ratio_upper_to_lower = total / lower_bound_at(problem, delta, *row.n);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace specrec
