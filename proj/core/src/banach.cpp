#include "specrec/banach.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specrec/errors.hpp"

namespace specrec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double logaddexp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    const double top = std::max(a, b);
    return top + std::log(std::exp(a - top) + std::exp(b - top));
}

// One-sided bound on a rule in the form log v_k <= (>=) logc + eta*log k +
// alpha*k^beta, valid for k >= valid_from.
struct Canon {
    double logc = 0.0;
    double eta = 0.0;
    double alpha = 0.0;
    double beta = 1.0;
    Index valid_from = 2;
};

std::optional<Canon> canonicalize(const SequenceRule& rule, bool upper) {
    if (const auto* pw = std::get_if<Power>(&rule)) {
        return Canon{0.0, pw->p, 0.0, 1.0, 1};
    }
    if (const auto* pp = std::get_if<PowerPaired>(&rule)) {
        // floor(k/2)+1 is squeezed between k/2 and k for k >= 2.
        if (upper) return Canon{0.0, pp->p, 0.0, 1.0, 2};
        return Canon{-pp->p * std::log(2.0), pp->p, 0.0, 1.0, 2};
    }
    if (const auto* gf = std::get_if<GeneralForm>(&rule)) {
        Canon c{std::log(gf->c), gf->eta, gf->alpha, gf->beta, 1};
        if (c.beta == 0.0) {  // constant exponential factor
            c.logc += c.alpha;
            c.alpha = 0.0;
            c.beta = 1.0;
        }
        return c;
    }
    if (const auto* tb = std::get_if<Tabulated>(&rule)) {
        if (!tb->log_step) return std::nullopt;
        // Exact linear continuation beyond the table.
        const double last = tb->log_values.back();
        const auto end = static_cast<double>(tb->log_values.size() - 1);
        return Canon{last - *tb->log_step * end, 0.0, *tb->log_step, 1.0,
                     tb->log_values.size() - 1};
    }
    return std::nullopt;  // opaque lambda rules admit no algebraic bound
}

// log of an upper bound on sum_{k > h} (mu_k/xi_k)^2, or nullopt when the
// rule pair admits none. +inf signals a provably non-summable tail.
std::optional<double> log_ratio_sq_tail_bound(const SpectralProblem& problem, Index h) {
    const auto um = canonicalize(problem.mu_sequence().rule(), /*upper=*/true);
    const auto lx = canonicalize(problem.xi_sequence().rule(), /*upper=*/false);
    if (!um || !lx) return std::nullopt;

    const double C = um->logc - lx->logc;
    const double P = um->eta - lx->eta;
    Index start = std::max({h + 1, um->valid_from, lx->valid_from, Index{2}});

    // Net exponential decay A * k^B of the ratio.
    double A = 0.0;
    double B = 1.0;
    if (um->alpha == 0.0 && lx->alpha == 0.0) {
        A = 0.0;
    } else if (lx->alpha == 0.0) {
        return kInf;  // mu outgrows xi exponentially
    } else if (um->alpha == 0.0) {
        A = lx->alpha;
        B = lx->beta;
    } else if (um->beta == lx->beta) {
        if (um->alpha > lx->alpha) return kInf;
        A = lx->alpha - um->alpha;
        B = lx->beta;
    } else if (um->beta < lx->beta) {
        // Give half the xi exponent away to swallow the mu exponent.
        A = lx->alpha / 2.0;
        B = lx->beta;
        const double cross =
            std::pow(2.0 * um->alpha / lx->alpha, 1.0 / (lx->beta - um->beta));
        if (cross > 1e7) return std::nullopt;
        start = std::max(start, static_cast<Index>(std::ceil(cross)));
    } else {
        return kInf;  // mu's exponent has the larger power
    }

    if (A == 0.0) {
        // Pure power tail: sum_{k>=s} k^{2P} <= s^{2P} + s^{2P+1}/(-2P-1).
        if (!(2.0 * P < -1.0)) return kInf;
        const double ls = std::log(static_cast<double>(start));
        return logaddexp(2.0 * C + 2.0 * P * ls,
                         2.0 * C + (2.0 * P + 1.0) * ls - std::log(-2.0 * P - 1.0));
    }

    if (B == 1.0) {
        // Plain exponential decay: the per-step factor of k^{2P} e^{-2Ak} is
        // ((k+1)/k)^{2P} e^{-2A}, which never exceeds its value at the first
        // index for P > 0 and never exceeds e^{-2A} otherwise, so a geometric
        // sum bounds the tail (exactly, when P = 0).
        double s = static_cast<double>(start);
        double log_explicit = -kInf;
        double q = std::exp(-2.0 * A);
        for (;;) {
            q = (P > 0.0 ? std::pow((s + 1.0) / s, 2.0 * P) : 1.0) * std::exp(-2.0 * A);
            if (q < 1.0) break;
            if (s > static_cast<double>(start) + 1e5) return std::nullopt;
            log_explicit =
                logaddexp(log_explicit, 2.0 * problem.log_ratio(static_cast<Index>(s)));
            s += 1.0;
        }
        const double log_geo =
            2.0 * C + 2.0 * P * std::log(s) - 2.0 * A * s - std::log1p(-q) ;
        return logaddexp(log_explicit, log_geo);
    }

    // Exponentially decaying tail. Advance K until the bounding integrand is
    // decreasing and the Laplace tail bound applies, then
    //   sum_{k>=K} <= term(K) + integral_K^inf
    // with integral <= (2/(2AB)) K^{2P+1-B} exp(-2AK^B).
    const double a_gamma = std::max({(2.0 * P + 1.0) / B, 1.0 / B, 1.0});
    double K = static_cast<double>(start);
    if (P > 0.0) K = std::max(K, std::pow(P / (A * B), 1.0 / B));
    K = std::max(K, std::pow((a_gamma + 1.0) / A, 1.0 / B));
    K = std::ceil(K);
    if (K - static_cast<double>(start) > 1e5) return std::nullopt;

    double log_explicit = -kInf;  // exact terms in [start, K)
    for (Index k = start; k < static_cast<Index>(K); ++k) {
        log_explicit = logaddexp(log_explicit, 2.0 * problem.log_ratio(k));
    }
    const double logK = std::log(K);
    const double u = 2.0 * A * std::pow(K, B);
    const double log_term_K = 2.0 * C + 2.0 * P * logK - u;
    const double log_integral =
        std::log(2.0) - std::log(2.0 * A * B) + (2.0 * P + 1.0 - B) * logK - u + 2.0 * C;
    return logaddexp(log_explicit, logaddexp(log_term_K, log_integral));
}

}  // namespace

std::optional<double> ratio_sq_tail_bound(const SpectralProblem& problem, Index h) {
    const auto lb = log_ratio_sq_tail_bound(problem, h);
    if (!lb) return std::nullopt;
    return std::exp(*lb);
}

CertifiedConstants certify_constants(const SpectralProblem& problem, Index horizon) {
    if (horizon < 4) throw std::invalid_argument("certification horizon must be >= 4");

    CertifiedConstants out;
    const Index half = horizon / 2;

    double log_head = -kInf;
    double c1_at_half = 0.0;
    for (Index n = 0; n <= horizon; ++n) {
        log_head = logaddexp(log_head, 2.0 * problem.log_mu(n));
        out.c1 = std::max(out.c1, std::exp(0.5 * log_head - problem.log_mu(n)));
        if (n == half) c1_at_half = out.c1;
    }

    const auto log_tail = log_ratio_sq_tail_bound(problem, horizon);
    if (!log_tail) {
        throw CertificationError(
            "tail of (mu/xi)^2 admits no algebraic bound for these rules; "
            "cannot certify c2");
    }
    if (*log_tail == kInf) {
        throw CertificationError("sum of (mu/xi)^2 is not certifiably convergent");
    }

    std::vector<double> log_suffix(horizon + 2, -kInf);
    log_suffix[horizon + 1] = *log_tail;
    for (Index n = horizon + 1; n-- > 0;) {
        log_suffix[n] = logaddexp(2.0 * problem.log_ratio(n), log_suffix[n + 1]);
    }
    double c2_at_half = 0.0;
    for (Index n = 0; n <= horizon; ++n) {
        out.c2 = std::max(out.c2, std::exp(0.5 * log_suffix[n] - problem.log_ratio(n)));
        if (n == half) c2_at_half = out.c2;
    }

    out.c1_stable = out.c1 <= c1_at_half * (1.0 + 1e-9);
    out.c2_stable = out.c2 <= c2_at_half * (1.0 + 1e-9);
    return out;
}

BanachContext make_banach_context(const SpectralProblem& problem, double q,
                                  double measure_q, double chi, Index horizon) {
    if (!(q >= 2.0)) throw std::invalid_argument("q must be >= 2 (or infinity)");
    if (!(measure_q > 0.0)) throw std::invalid_argument("|Q| must be positive");
    if (!(chi > 0.0)) throw std::invalid_argument("chi must be positive");
    const auto constants = certify_constants(problem, horizon);
    return BanachContext{q, measure_q, chi, constants.c1, constants.c2, horizon};
}

double lq_lower_bound(const SpectralProblem& problem, const BanachContext& ctx,
                      double delta, Index n) {
    const double inv_q = std::isinf(ctx.q) ? 0.0 : 1.0 / ctx.q;
    const double factor = std::pow(ctx.measure_q, inv_q - 0.5);
    const Index threshold = problem.threshold_index(delta);
    return factor * std::max(problem.ratio(threshold), problem.ratio(n));
}

double lq_upper_bound(const SpectralProblem& problem, const BanachContext& ctx,
                      double delta, Index n) {
    if (n < 1) throw std::invalid_argument("lq upper bound needs n >= 1");
    if (n > ctx.horizon) {
        throw std::invalid_argument("n exceeds the certification horizon of the context");
    }
    const double inv_q = std::isinf(ctx.q) ? 0.0 : 1.0 / ctx.q;
    const double factor = std::max(ctx.c1, ctx.c2) * std::pow(ctx.measure_q, inv_q) * ctx.chi;
    const double noise = std::exp(std::log(delta) + problem.log_mu(n - 1));
    return factor * (problem.ratio(n) + noise);
}

}  // namespace specrec
