#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specrec/sequence.hpp"

namespace specrec {

/// Certifies that ratio(k + period) <= ratio(k) for every k >= from, where
/// ratio(k) = mu_k / xi_k. period = 1 is plain monotone decay; period = 2
/// covers paired eigenvalue layouts whose ratio dips and recovers within each
/// pair but decays across pairs. The certificate is caller-supplied (or set
/// by a problem factory) and is checked numerically by validate().
struct RatioCertificate {
    Index from = 0;
    Index period = 1;
};

enum class ViolationKind {
    MuPositivity,
    MuMonotonicity,
    XiPositivity,
    XiMonotonicity,
    RatioDecay,
    CertificateBreach,
};

struct Violation {
    ViolationKind kind;
    Index index;
    std::string message;
};

/// The pair (A, W): eigenvalues mu_k of the operator and weights xi_k of the
/// smoothness ball, with a decay certificate for mu_k/xi_k and a horizon
/// bounding every index scan.
class SpectralProblem {
public:
    SpectralProblem(Sequence mu, Sequence xi,
                    std::optional<RatioCertificate> certificate, Index horizon);

    double log_mu(Index k) const { return mu_.log_at(k); }
    double log_xi(Index k) const { return xi_.log_at(k); }
    double mu(Index k) const { return mu_.at(k); }
    double xi(Index k) const { return xi_.at(k); }

    double log_ratio(Index k) const { return mu_.log_at(k) - xi_.log_at(k); }

    /// mu_k / xi_k, formed as exp of the log difference.
    double ratio(Index k) const;

    /// Smallest N >= 0 with xi_N >= 1/delta, by linear scan from 0.
    /// Throws HorizonError when no index up to the horizon qualifies.
    Index threshold_index(double delta) const;

    /// sup_{k >= n} mu_k / xi_k. Requires the ratio certificate: the
    /// supremum is the max of ratio over [n, max(n, from) + period), every
    /// later value being dominated by one in that window. Throws
    /// UncertifiedTailError when no certificate is present.
    double tail_sup_ratio(Index n) const;

    /// log of tail_sup_ratio, computed without leaving log-space.
    double log_tail_sup_ratio(Index n) const;

    /// Index attaining tail_sup_ratio(n) (smallest maximizer).
    Index tail_argmax(Index n) const;

    /// Checks positivity and monotonicity of both sequences, certified ratio
    /// decay, and the certificate itself, all up to the horizon. Violations
    /// are data, not errors: an empty result means the problem is clean.
    std::vector<Violation> validate() const;

    const Sequence& mu_sequence() const { return mu_; }
    const Sequence& xi_sequence() const { return xi_; }
    const std::optional<RatioCertificate>& ratio_certificate() const { return certificate_; }
    Index horizon() const { return horizon_; }

    /// True when the certificate asserts plain monotone decay from index 0,
    /// the standing hypothesis of the sharp optimality statements.
    bool ratio_monotone_from_zero() const;

private:
    Sequence mu_;
    Sequence xi_;
    std::optional<RatioCertificate> certificate_;
    Index horizon_;
};

}  // namespace specrec
