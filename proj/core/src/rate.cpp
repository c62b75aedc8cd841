#include "specrec/rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rng_util.hpp"

namespace specrec {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CoefficientVector truncation_error_coeffs(const SpectralProblem& problem,
                                          const AttackInstance& inst, Index n) {
    CoefficientVector err;
    for (const auto& [k, v] : inst.f_delta.entries()) {
        if (k >= n) break;
        err.set(k, std::exp(problem.log_mu(k)) * (inst.f.get(k) - v));
    }
    for (const auto& [k, v] : inst.f.entries()) {
        if (k < n) {
            if (inst.f_delta.get(k) == 0.0) {
                err.set(k, std::exp(problem.log_mu(k)) * v);
            }
        } else {
            err.set(k, std::exp(problem.log_mu(k)) * v);
        }
    }
    return err;
}

}  // namespace

RateFit fit_loglog(std::span<const double> x, std::span<const double> y,
                   std::string abscissa) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two (x, y) pairs");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    RateFit fit;
    fit.abscissa = std::move(abscissa);
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        rss += r * r;
    }
    fit.residual_rms = std::sqrt(rss / n);
    return fit;
}

RateTable rate_experiment(const RateApplication& app, std::span<const double> deltas,
                          std::size_t trials, std::uint64_t seed,
                          const RateOptions& options) {
    if (deltas.size() < 2) {
        throw std::invalid_argument("rate experiment needs at least two deltas");
    }
    for (std::size_t i = 1; i < deltas.size(); ++i) {
        if (!(deltas[i] < deltas[i - 1])) {
            throw std::invalid_argument("deltas must be strictly decreasing");
        }
    }

    const bool is_heat = std::holds_alternative<HeatApp>(app);
    const bool severe = is_heat && std::get<HeatApp>(app).hp.t == std::get<HeatApp>(app).hp.T;
    const SpectralProblem problem =
        is_heat ? heat_spectral_problem(std::get<HeatApp>(app).hp, options.horizon)
                : numdiff_problem(std::get<NumDiffApp>(app).gamma, options.horizon);

    // L_q brackets need the uniform basis bound chi: known for the concrete
    // trigonometric basis, caller-supplied for abstract ones.
    std::optional<double> chi = options.chi;
    if (!chi && !is_heat) chi = 1.0 / std::sqrt(M_PI);
    std::optional<BanachContext> ctx0;
    if (!options.qs.empty() && chi) {
        ctx0 = make_banach_context(problem, 2.0, 2.0 * M_PI, *chi, options.horizon);
    }

    RateTable table;
    std::vector<double> fit_x, fit_y;
    for (std::size_t row_idx = 0; row_idx < deltas.size(); ++row_idx) {
        const double delta = deltas[row_idx];
        RateRow row;
        row.delta = delta;
        row.n = select_n(problem, delta, MatchedDecay{options.match_constant});
        row.threshold = problem.threshold_index(delta);
        const auto wce = worst_case_error(problem, delta, row.n);
        row.tail_term = wce.tail_term;
        row.noise_term = wce.noise_term;
        row.total = wce.total;
        row.lower = lower_bound_at(problem, delta, row.n);

        const std::uint64_t row_seed = detail::mix_seed(seed, row_idx);
        row.empirical_max = empirical_error(problem, extremal_pair(problem, delta, row.n), row.n);
        const auto random_errors = random_attack(problem, delta, row.n, trials, row_seed);
        for (const double e : random_errors) row.empirical_max = std::max(row.empirical_max, e);

        if (!options.qs.empty()) {
            std::vector<AttackInstance> lq_instances;
            if (ctx0) {
                lq_instances = random_attack_instances(problem, delta, row.n,
                                                       options.lq_attack_instances,
                                                       detail::mix_seed(seed, 1000 + row_idx));
                lq_instances.push_back(extremal_pair(problem, delta, row.n));
            }
            for (const double q : options.qs) {
                LqBracket bracket{kNaN, kNaN, kNaN};
                if (ctx0) {
                    BanachContext ctx = *ctx0;
                    ctx.q = q;
                    bracket.lower = lq_lower_bound(problem, ctx, delta, row.n);
                    bracket.upper = lq_upper_bound(problem, ctx, delta, row.n);
                    if (!is_heat) {
                        bracket.empirical = 0.0;
                        for (const auto& inst : lq_instances) {
                            const auto err = truncation_error_coeffs(problem, inst, row.n);
                            const auto g = synthesize(err, options.grid_samples);
                            bracket.empirical = std::max(bracket.empirical, lq_norm(g, q));
                        }
                    }
                }
                row.lq[q] = bracket;
            }
        }

        fit_x.push_back(severe ? std::log(std::log(1.0 / delta)) : std::log(delta));
        fit_y.push_back(std::log(row.total));
        row.slope_so_far =
            fit_x.size() >= 2
                ? fit_loglog(fit_x, fit_y, "").slope
                : kNaN;
        table.rows.push_back(std::move(row));
    }

    if (fit_x.size() >= 2) {
        table.fit = fit_loglog(fit_x, fit_y,
                               severe ? "log(log(1/delta))" : "log(delta)");
    }
    return table;
}

}  // namespace specrec
