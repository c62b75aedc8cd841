#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace specrec {

using Index = std::size_t;

/// v_{2k} = v_{2k+1} = (k+1)^p. The eigenvalue layout of a second-derivative
/// operator on zero-mean periodic functions: cosine/sine pairs share a value.
struct PowerPaired {
    double p = 1.0;
};

/// v_k = max(1,k)^p. p = 0 gives the constant sequence 1.
struct Power {
    double p = 1.0;
};

/// v_k = exp(lambda(k) * t). lambda must be nonnegative and nondecreasing;
/// t >= 0. The callable must be pure: evaluation happens on demand, possibly
/// from several threads.
struct ExpOfLambda {
    std::function<double(Index)> lambda;
    double t = 1.0;
};

/// v_k = c * max(1,k)^eta * exp(alpha * k^beta), c > 0, eta >= 0, alpha >= 0,
/// 0 <= beta <= 1. alpha + eta = 0 is allowed and gives the constant c;
/// divergence is enforced only where a role requires it (see
/// SpectralProblem::validate).
struct GeneralForm {
    double c = 1.0;
    double eta = 0.0;
    double alpha = 0.0;
    double beta = 1.0;
};

/// Explicit table of log-values. Beyond the table the log continues with a
/// fixed per-index increment when log_step is set; otherwise evaluation past
/// the end throws HorizonError.
struct Tabulated {
    std::vector<double> log_values;
    std::optional<double> log_step;
};

using SequenceRule = std::variant<PowerPaired, Power, ExpOfLambda, GeneralForm, Tabulated>;

/// A nondecreasing positive sequence, evaluated and stored in log-space so
/// that exponential rules (alpha * k up to several hundred in natural-log
/// units) never overflow before a ratio or an error term is formed.
class Sequence {
public:
    explicit Sequence(SequenceRule rule);

    /// log v_k. Exact for closed-form rules, table lookup otherwise.
    double log_at(Index k) const;

    /// v_k = exp(log_at(k)). May overflow to +inf for exponential rules;
    /// prefer log_at when combining sequences.
    double at(Index k) const;

    const SequenceRule& rule() const { return rule_; }

    /// Size of the table for Tabulated rules without continuation; nullopt
    /// when the sequence is defined for every index.
    std::optional<Index> defined_up_to() const;

    std::string describe() const;

private:
    SequenceRule rule_;
};

}  // namespace specrec
