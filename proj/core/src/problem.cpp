#include "specrec/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "specrec/errors.hpp"

namespace specrec {

namespace {
// Slack for discrete monotonicity checks on log values: rounding noise only,
// far below any modeled quantity.
constexpr double kLogSlack = 1e-12;
}  // namespace

SpectralProblem::SpectralProblem(Sequence mu, Sequence xi,
                                 std::optional<RatioCertificate> certificate,
                                 Index horizon)
    : mu_(std::move(mu)), xi_(std::move(xi)), certificate_(certificate), horizon_(horizon) {
    if (horizon_ < 1) throw std::invalid_argument("horizon must be at least 1");
    if (certificate_ && certificate_->period < 1)
        throw std::invalid_argument("ratio certificate period must be at least 1");
}

double SpectralProblem::ratio(Index k) const { return std::exp(log_ratio(k)); }

Index SpectralProblem::threshold_index(double delta) const {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    const double target = -std::log(delta);  // log(1/delta)
    for (Index k = 0; k <= horizon_; ++k) {
        if (log_xi(k) >= target) return k;
    }
    std::ostringstream msg;
    msg << "xi does not reach 1/delta = " << 1.0 / delta << " within horizon " << horizon_;
    throw HorizonError(msg.str());
}

double SpectralProblem::log_tail_sup_ratio(Index n) const {
    return log_ratio(tail_argmax(n));
}

Index SpectralProblem::tail_argmax(Index n) const {
    if (!certificate_) {
        throw UncertifiedTailError(
            "tail supremum of mu/xi requires a ratio decay certificate");
    }
    const Index start = std::max(n, certificate_->from);
    const Index last = start + certificate_->period - 1;
    Index best = n;
    double best_log = log_ratio(n);
    for (Index k = n + 1; k <= last; ++k) {
        const double lr = log_ratio(k);
        if (lr > best_log) {
            best = k;
            best_log = lr;
        }
    }
    return best;
}

double SpectralProblem::tail_sup_ratio(Index n) const {
    return std::exp(log_tail_sup_ratio(n));
}

bool SpectralProblem::ratio_monotone_from_zero() const {
    return certificate_ && certificate_->from == 0 && certificate_->period == 1;
}

std::vector<Violation> SpectralProblem::validate() const {
    std::vector<Violation> out;
    const auto scan_limit = [this](const Sequence& s) {
        const auto bound = s.defined_up_to();
        return bound ? std::min(horizon_, *bound) : horizon_;
    };

    const Index mu_limit = scan_limit(mu_);
    const Index xi_limit = scan_limit(xi_);

    if (!std::isfinite(log_mu(0)) || log_mu(0) == -std::numeric_limits<double>::infinity()) {
        out.push_back({ViolationKind::MuPositivity, 0, "mu_0 must be positive"});
    }
    if (!std::isfinite(log_xi(0))) {
        out.push_back({ViolationKind::XiPositivity, 0, "xi_0 must be positive"});
    }
    for (Index k = 0; k + 1 <= mu_limit; ++k) {
        if (log_mu(k + 1) < log_mu(k) - kLogSlack) {
            std::ostringstream msg;
            msg << "mu decreases between indices " << k << " and " << k + 1;
            out.push_back({ViolationKind::MuMonotonicity, k, msg.str()});
            break;
        }
    }
    for (Index k = 0; k + 1 <= xi_limit; ++k) {
        if (log_xi(k + 1) < log_xi(k) - kLogSlack) {
            std::ostringstream msg;
            msg << "xi decreases between indices " << k << " and " << k + 1;
            out.push_back({ViolationKind::XiMonotonicity, k, msg.str()});
            break;
        }
    }

    const Index ratio_limit = std::min(mu_limit, xi_limit);
    if (log_ratio(ratio_limit) >= log_ratio(0)) {
        out.push_back({ViolationKind::RatioDecay, ratio_limit,
                       "mu/xi does not decrease from index 0 to the horizon"});
    }
    if (certificate_) {
        const Index from = certificate_->from;
        const Index period = certificate_->period;
        for (Index k = from; k + period <= ratio_limit; ++k) {
            if (log_ratio(k + period) > log_ratio(k) + kLogSlack) {
                std::ostringstream msg;
                msg << "certificate breach: ratio(" << k + period << ") > ratio(" << k << ")";
                out.push_back({ViolationKind::CertificateBreach, k, msg.str()});
                break;
            }
        }
    }
    return out;
}

}  // namespace specrec
