#include "specrec/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specrec/errors.hpp"

namespace specrec {

std::vector<double> info_map(const CoefficientVector& f_delta, Index n) {
    if (n < 1) throw std::invalid_argument("truncation level n must be at least 1");
    std::vector<double> x(n, 0.0);
    for (const auto& [k, v] : f_delta.entries()) {
        if (k >= n) break;  // entries are ordered
        x[k] = v;
    }
    return x;
}

CoefficientVector reconstruct(const SpectralProblem& problem,
                              const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("information vector must be nonempty");
    CoefficientVector out;
    for (Index k = 0; k < x.size(); ++k) {
        if (x[k] != 0.0) out.set(k, problem.mu(k) * x[k]);
    }
    return out;
}

CoefficientVector apply_truncation(const SpectralProblem& problem,
                                   const NoisyObservation& obs, Index n) {
    return reconstruct(problem, info_map(obs.coeffs, n));
}

TruncationErrorBreakdown worst_case_error(const SpectralProblem& problem,
                                          double delta, Index n) {
    if (n < 1) throw std::invalid_argument("truncation level n must be at least 1");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    TruncationErrorBreakdown out;
    out.n = n;
    out.tail_term = problem.tail_sup_ratio(n);
    out.noise_term = std::exp(std::log(delta) + problem.log_mu(n - 1));
    out.total = std::hypot(out.tail_term, out.noise_term);
    return out;
}

Index select_n(const SpectralProblem& problem, double delta,
               const SelectionStrategy& strategy) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    return std::visit(
        [&](const auto& s) -> Index {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, ThresholdRule>) {
                return std::max<Index>(1, problem.threshold_index(delta));
            } else if constexpr (std::is_same_v<S, MinimizeBound>) {
                const Index n_max = s.n_max
                                        ? *s.n_max
                                        : std::min(problem.horizon(),
                                                   problem.threshold_index(delta) + 8);
                if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
                Index best = 1;
                double best_total = worst_case_error(problem, delta, 1).total;
                for (Index n = 2; n <= n_max; ++n) {
                    const double total = worst_case_error(problem, delta, n).total;
                    if (total < best_total) {  // ties keep the smaller n
                        best = n;
                        best_total = total;
                    }
                }
                return best;
            } else {
                static_assert(std::is_same_v<S, MatchedDecay>);
                if (!(s.constant > 0.0))
                    throw std::invalid_argument("matching constant must be positive");
                const double target = std::log(s.constant) - std::log(delta);
                for (Index n = 1; n <= problem.horizon(); ++n) {
                    if (problem.log_xi(n) >= target) return n;
                }
                throw HorizonError("no index matches the decay target within the horizon");
            }
        },
        strategy);
}

}  // namespace specrec
