#pragma once

#include "specrec/grid.hpp"
#include "specrec/problem.hpp"

namespace specrec {

/// Everything the L_q bounds need besides the spectral problem: the exponent,
/// the measure of the domain, the uniform bound chi on the eigenfunctions,
/// and the certified norm-equivalence constants.
struct BanachContext {
    double q = 2.0;            // in [2, inf]; use std::numeric_limits<double>::infinity() for C(Q)
    double measure_q = 0.0;    // |Q|
    double chi = 0.0;          // sup_k ||w_k||_C
    double c1 = 0.0;           // head-sum constant
    double c2 = 0.0;           // tail-sum constant
    Index horizon = 0;         // indices the constants were certified over
};

struct CertifiedConstants {
    double c1 = 0.0;
    double c2 = 0.0;
    /// True when the scan maximum stopped growing well before the horizon;
    /// false means the constant is only valid up to the horizon and keeps
    /// growing with it (the exponential-growth hypothesis fails).
    bool c1_stable = false;
    bool c2_stable = false;
};

/// Smallest constants with (sum_{k<=N} mu_k^2)^{1/2} <= c1 * mu_N and
/// (sum_{k>=N} mu_k^2/xi_k^2)^{1/2} <= c2 * mu_N/xi_N for every N up to the
/// horizon. Head sums are scanned directly (in log-space); the tail beyond
/// the horizon is covered by a rule-derived majorant. Throws
/// CertificationError when no majorant is available (opaque lambda rules,
/// tables without continuation) or the tail provably diverges.
CertifiedConstants certify_constants(const SpectralProblem& problem, Index horizon);

/// Upper bound on sum_{k > h} (mu_k/xi_k)^2 derived from the rule pair, or
/// nullopt when the rules admit none. Exposed for tests.
std::optional<double> ratio_sq_tail_bound(const SpectralProblem& problem, Index h);

/// Convenience: certify constants and bundle them with (q, |Q|, chi).
BanachContext make_banach_context(const SpectralProblem& problem, double q,
                                  double measure_q, double chi, Index horizon);

/// Lower bound on the L_q recovery error with n functionals:
/// |Q|^{1/q - 1/2} * max{ratio(threshold), ratio(n)}.
double lq_lower_bound(const SpectralProblem& problem, const BanachContext& ctx,
                      double delta, Index n);

/// Upper bound on the L_q error of truncation at level n:
/// max{c1, c2} * |Q|^{1/q} * chi * (ratio(n) + delta * mu_{n-1}).
double lq_upper_bound(const SpectralProblem& problem, const BanachContext& ctx,
                      double delta, Index n);

}  // namespace specrec
