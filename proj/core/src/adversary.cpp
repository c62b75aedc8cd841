#include "specrec/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "rng_util.hpp"

namespace specrec {

namespace {

using detail::mix_seed;
using detail::standard_normal;
using detail::uniform01;

double log_sum_exp(const std::vector<double>& logs) {
    double top = -std::numeric_limits<double>::infinity();
    for (const double l : logs) top = std::max(top, l);
    if (!std::isfinite(top)) return top;
    double sum = 0.0;
    for (const double l : logs) sum += std::exp(l - top);
    return top + std::log(sum);
}

}  // namespace

AttackInstance extremal_source(const SpectralProblem& problem, double delta) {
    const Index threshold = problem.threshold_index(delta);
    AttackInstance out;
    out.f.set(threshold, std::exp(-problem.log_xi(threshold)));
    out.label = AttackLabel::ExtremalSource;
    return out;
}

AttackInstance extremal_pair(const SpectralProblem& problem, double delta, Index n) {
    if (n < 1) throw std::invalid_argument("extremal pair needs n >= 1");
    const Index l = problem.tail_argmax(n);
    AttackInstance out;
    out.f.set(l, std::exp(-problem.log_xi(l)));
    out.f_delta = out.f;
    out.f_delta.add(n - 1, delta);
    out.label = AttackLabel::ExtremalPair;
    return out;
}

double empirical_error(const SpectralProblem& problem,
                       const AttackInstance& instance, Index n) {
    if (n < 1) throw std::invalid_argument("empirical error needs n >= 1");
    double sum = 0.0;
    // Head: amplified data error on the kept coefficients.
    for (const auto& [k, v] : instance.f_delta.entries()) {
        if (k >= n) break;
        const double diff = instance.f.get(k) - v;
        const double term = std::exp(problem.log_mu(k)) * diff;
        sum += term * term;
    }
    for (const auto& [k, v] : instance.f.entries()) {
        if (k < n) {
            if (instance.f_delta.get(k) == 0.0) {  // not covered above
                const double term = std::exp(problem.log_mu(k)) * v;
                sum += term * term;
            }
        } else {
            // Tail: coefficients the truncation discards entirely.
            const double term = std::exp(problem.log_mu(k)) * v;
            sum += term * term;
        }
    }
    return std::sqrt(sum);
}

BruteForceResult brute_force_worst_case(const SpectralProblem& problem,
                                        double delta, Index n, Index m,
                                        std::size_t search_samples,
                                        std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("brute force needs n >= 1");
    if (m < n) throw std::invalid_argument("brute force horizon m must be >= n");

    // One-hot enumeration. The objective splits over disjoint blocks and is
    // linear in the squared entries, so extreme points of the feasible set
    // put all unit-ball mass on one tail index and all noise on one head
    // index. No monotonicity is assumed: every index is visited.
    Index tail_index = n;
    double tail_log = problem.log_ratio(n);
    for (Index k = n + 1; k <= m; ++k) {
        const double lr = problem.log_ratio(k);
        if (lr > tail_log) {
            tail_log = lr;
            tail_index = k;
        }
    }
    Index noise_index = 0;
    double noise_log = problem.log_mu(0);
    for (Index k = 1; k < n; ++k) {
        const double lm = problem.log_mu(k);
        if (lm > noise_log) {
            noise_log = lm;
            noise_index = k;
        }
    }
    noise_log += std::log(delta);

    BruteForceResult result;
    result.value = std::hypot(std::exp(tail_log), std::exp(noise_log));
    result.tail_index = tail_index;
    result.noise_index = noise_index;
    result.witness.f.set(tail_index, std::exp(-problem.log_xi(tail_index)));
    result.witness.f_delta = result.witness.f;
    result.witness.f_delta.add(noise_index, delta);
    result.witness.label = AttackLabel::ExtremalPair;

    // Projected random search: no sampled feasible point may beat the
    // enumerated maximum. This is a self-check of the enumeration, not a
    // search for a better value. Supports are capped at m so the samples
    // live in the same feasible set the enumeration covered.
    SpectralProblem capped(problem.mu_sequence(), problem.xi_sequence(),
                           problem.ratio_certificate(), m);
    const auto samples = random_attack(capped, delta, n, search_samples, seed);
    for (const double err : samples) {
        if (err > result.value * (1.0 + 1e-12)) {
            throw std::logic_error("random feasible point beat the one-hot enumeration");
        }
    }
    return result;
}

std::vector<AttackInstance> random_attack_instances(const SpectralProblem& problem,
                                                    double delta, Index n,
                                                    std::size_t trials,
                                                    std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random attack needs n >= 1");
    std::vector<AttackInstance> out;
    out.reserve(trials);

    const Index f_cap = std::min(problem.horizon(), n + 64);
    const Index e_cap = std::min<Index>(problem.horizon() + 1, n + 16);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(mix_seed(seed, trial));
        AttackInstance inst;
        inst.label = AttackLabel::Random;

        // Unit-ball element: random finite support, spherical direction,
        // then scaled so the weighted norm is exactly u <= 1. Repeated index
        // draws are accumulated before normalization. Scaling runs in
        // log-space; the weights may be astronomically large.
        const bool one_hot_f = (rng() & 3u) == 0;
        const std::size_t support = one_hot_f ? 1 : 1 + static_cast<std::size_t>(rng() % 8);
        CoefficientVector direction;
        for (std::size_t i = 0; i < support; ++i) {
            direction.add(static_cast<Index>(rng() % (f_cap + 1)), standard_normal(rng));
        }
        const bool boundary_f = (rng() & 3u) == 0;
        const double u = boundary_f ? 1.0 : uniform01(rng);
        if (!direction.empty() && u > 0.0) {
            std::vector<double> weighted_logs;
            for (const auto& [k, v] : direction.entries()) {
                weighted_logs.push_back(2.0 * (problem.log_xi(k) + std::log(std::abs(v))));
            }
            const double log_wnorm = 0.5 * log_sum_exp(weighted_logs);
            for (const auto& [k, v] : direction.entries()) {
                const double mag = std::exp(std::log(std::abs(v)) + std::log(u) - log_wnorm);
                inst.f.set(k, std::copysign(mag, v));
            }
        }

        // Noise within the delta-ball, confined to the head block (tail
        // noise never reaches the reconstruction).
        const bool one_hot_e = (rng() & 3u) == 0;
        const std::size_t e_support = one_hot_e ? 1 : 1 + static_cast<std::size_t>(rng() % 4);
        CoefficientVector noise;
        for (std::size_t i = 0; i < e_support; ++i) {
            noise.add(static_cast<Index>(rng() % e_cap), standard_normal(rng));
        }
        const bool boundary_e = (rng() & 3u) == 0;
        const double v = boundary_e ? 1.0 : uniform01(rng);
        const double e_norm = h_norm(noise);
        inst.f_delta = inst.f;
        if (e_norm > 0.0 && v > 0.0) {
            inst.f_delta = inst.f + noise.scaled(v * delta / e_norm);
        }
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<double> random_attack(const SpectralProblem& problem, double delta,
                                  Index n, std::size_t trials, std::uint64_t seed) {
    const auto instances = random_attack_instances(problem, delta, n, trials, seed);
    std::vector<double> errors;
    errors.reserve(instances.size());
    for (const auto& inst : instances) {
        errors.push_back(empirical_error(problem, inst, n));
    }
    return errors;
}

AttackVerdict attack_verdict(const SpectralProblem& problem, double delta,
                             Index n, std::size_t trials, std::uint64_t seed,
                             double tolerance, double formula_scale) {
    AttackVerdict verdict;
    verdict.formula_total = worst_case_error(problem, delta, n).total * formula_scale;

    const auto oracle = brute_force_worst_case(problem, delta, n, problem.horizon(),
                                               std::max<std::size_t>(trials / 4, 64), seed);
    verdict.oracle_value = oracle.value;
    verdict.oracle_gap = std::abs(oracle.value - verdict.formula_total) /
                         std::max(verdict.formula_total, std::numeric_limits<double>::min());

    const double attained = empirical_error(problem, extremal_pair(problem, delta, n), n);
    verdict.attainment_gap = std::abs(attained - verdict.formula_total) /
                             std::max(verdict.formula_total, std::numeric_limits<double>::min());

    const auto errors = random_attack(problem, delta, n, trials, seed);
    verdict.random_max = errors.empty() ? 0.0 : *std::max_element(errors.begin(), errors.end());

    const bool dominated = verdict.random_max <= verdict.formula_total * (1.0 + tolerance);
    verdict.pass = verdict.oracle_gap <= tolerance && verdict.attainment_gap <= tolerance &&
                   dominated;
    return verdict;
}

}  // namespace specrec
