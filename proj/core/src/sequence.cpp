#include "specrec/sequence.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "specrec/errors.hpp"

namespace specrec {

namespace {

double log_max1(Index k) {
    return std::log(static_cast<double>(k < 1 ? 1 : k));
}

void check_rule(const SequenceRule& rule) {
    if (const auto* pp = std::get_if<PowerPaired>(&rule)) {
        if (!(pp->p > 0.0)) throw std::invalid_argument("power_paired: exponent must be positive");
    } else if (const auto* pw = std::get_if<Power>(&rule)) {
        if (!(pw->p >= 0.0)) throw std::invalid_argument("power: exponent must be nonnegative");
    } else if (const auto* el = std::get_if<ExpOfLambda>(&rule)) {
        if (!el->lambda) throw std::invalid_argument("exp_of_lambda: missing lambda");
        if (!(el->t >= 0.0)) throw std::invalid_argument("exp_of_lambda: t must be nonnegative");
    } else if (const auto* gf = std::get_if<GeneralForm>(&rule)) {
        if (!(gf->c > 0.0)) throw std::invalid_argument("general_form: c must be positive");
        if (!(gf->eta >= 0.0)) throw std::invalid_argument("general_form: eta must be nonnegative");
        if (!(gf->alpha >= 0.0)) throw std::invalid_argument("general_form: alpha must be nonnegative");
        if (!(gf->beta >= 0.0 && gf->beta <= 1.0))
            throw std::invalid_argument("general_form: beta must lie in [0, 1]");
    } else if (const auto* tb = std::get_if<Tabulated>(&rule)) {
        if (tb->log_values.empty()) throw std::invalid_argument("tabulated: empty table");
    }
}

}  // namespace

Sequence::Sequence(SequenceRule rule) : rule_(std::move(rule)) {
    check_rule(rule_);
}

double Sequence::log_at(Index k) const {
    return std::visit(
        [k](const auto& r) -> double {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, PowerPaired>) {
                return r.p * std::log(static_cast<double>(k / 2 + 1));
            } else if constexpr (std::is_same_v<R, Power>) {
                return r.p * log_max1(k);
            } else if constexpr (std::is_same_v<R, ExpOfLambda>) {
                return r.lambda(k) * r.t;
            } else if constexpr (std::is_same_v<R, GeneralForm>) {
                const double kd = static_cast<double>(k);
                return std::log(r.c) + r.eta * log_max1(k) +
                       (r.alpha == 0.0 ? 0.0 : r.alpha * std::pow(kd, r.beta));
            } else {
                if (k < r.log_values.size()) return r.log_values[k];
                if (!r.log_step) {
                    std::ostringstream msg;
                    msg << "tabulated sequence has no value at index " << k
                        << " (table size " << r.log_values.size() << ", no continuation)";
                    throw HorizonError(msg.str());
                }
                const double extra = static_cast<double>(k - (r.log_values.size() - 1));
                return r.log_values.back() + *r.log_step * extra;
            }
        },
        rule_);
}

double Sequence::at(Index k) const { return std::exp(log_at(k)); }

std::optional<Index> Sequence::defined_up_to() const {
    if (const auto* tb = std::get_if<Tabulated>(&rule_); tb && !tb->log_step) {
        return tb->log_values.size() - 1;
    }
    return std::nullopt;
}

std::string Sequence::describe() const {
    std::ostringstream out;
    std::visit(
        [&out](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, PowerPaired>) {
                out << "power_paired(" << r.p << ")";
            } else if constexpr (std::is_same_v<R, Power>) {
                out << "power(" << r.p << ")";
            } else if constexpr (std::is_same_v<R, ExpOfLambda>) {
                out << "exp_of_lambda(t=" << r.t << ")";
            } else if constexpr (std::is_same_v<R, GeneralForm>) {
                out << "general_form(c=" << r.c << ", eta=" << r.eta << ", alpha=" << r.alpha
                    << ", beta=" << r.beta << ")";
            } else {
                out << "tabulated(" << r.log_values.size() << " values";
                if (r.log_step) out << ", step=" << *r.log_step;
                out << ")";
            }
        },
        rule_);
    return out.str();
}

}  // namespace specrec
