#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "specrec/applications.hpp"
#include "specrec/banach.hpp"

namespace specrec {

struct NumDiffApp {
    double gamma = 4.0;
};
struct HeatApp {
    HeatProblem hp;
};
using RateApplication = std::variant<NumDiffApp, HeatApp>;

struct LqBracket {
    double lower = 0.0;
    double upper = 0.0;
    double empirical = 0.0;   // NaN when no concrete basis exists
};

struct RateRow {
    double delta = 0.0;
    Index n = 0;
    Index threshold = 0;
    double tail_term = 0.0;
    double noise_term = 0.0;
    double total = 0.0;
    double lower = 0.0;
    double empirical_max = 0.0;
    std::map<double, LqBracket> lq;   // keyed by q
    double slope_so_far = 0.0;        // NaN until two rows exist
};

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
    std::string abscissa;   // "log(delta)" or "log(log(1/delta))"
};

struct RateTable {
    std::vector<RateRow> rows;
    std::optional<RateFit> fit;   // present iff >= 2 rows
};

struct RateOptions {
    double match_constant = 1.0;
    Index horizon = 4096;
    Index grid_samples = 4096;
    std::vector<double> qs;            // empty: no L_q columns
    std::optional<double> chi;         // required for L_q columns on abstract bases
    std::size_t lq_attack_instances = 8;
};

/// For each delta: order-matched n, exact worst-case split, lower bound,
/// worst empirical attack over extremal + random instances, optional L_q
/// brackets, and a running log-log slope. The fitted abscissa is
/// log(log(1/delta)) when the application decays logarithmically
/// (backward heat at t = T), log(delta) otherwise.
RateTable rate_experiment(const RateApplication& app, std::span<const double> deltas,
                          std::size_t trials, std::uint64_t seed,
                          const RateOptions& options);

/// Least-squares slope of y against x with RMS residual.
RateFit fit_loglog(std::span<const double> x, std::span<const double> y,
                   std::string abscissa);

}  // namespace specrec
