#include "specrec/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace specrec {

double CoefficientVector::get(Index k) const {
    const auto it = entries_.find(k);
    return it == entries_.end() ? 0.0 : it->second;
}

void CoefficientVector::set(Index k, double value) {
    if (value == 0.0) {
        entries_.erase(k);
    } else {
        entries_[k] = value;
    }
}

void CoefficientVector::add(Index k, double value) { set(k, get(k) + value); }

Index CoefficientVector::max_index() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
}

CoefficientVector CoefficientVector::operator-(const CoefficientVector& other) const {
    CoefficientVector out = *this;
    for (const auto& [k, v] : other.entries_) out.add(k, -v);
    return out;
}

CoefficientVector CoefficientVector::operator+(const CoefficientVector& other) const {
    CoefficientVector out = *this;
    for (const auto& [k, v] : other.entries_) out.add(k, v);
    return out;
}

CoefficientVector CoefficientVector::scaled(double factor) const {
    CoefficientVector out;
    for (const auto& [k, v] : entries_) out.set(k, v * factor);
    return out;
}

double h_norm(const CoefficientVector& v) {
    double sum = 0.0;
    for (const auto& [k, value] : v.entries()) sum += value * value;
    return std::sqrt(sum);
}

double w_norm(const SpectralProblem& problem, const CoefficientVector& v) {
    double sum = 0.0;
    for (const auto& [k, value] : v.entries()) {
        const double weighted = std::exp(problem.log_xi(k) + std::log(std::abs(value)));
        sum += weighted * weighted;
    }
    return std::sqrt(sum);
}

NoisyObservation::NoisyObservation(CoefficientVector c, double d)
    : coeffs(std::move(c)), delta(d) {
    if (!(delta > 0.0)) throw std::invalid_argument("noise radius delta must be positive");
}

}  // namespace specrec
