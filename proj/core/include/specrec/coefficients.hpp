#pragma once

#include <map>

#include "specrec/problem.hpp"

namespace specrec {

/// Finitely supported real coefficients in the eigenbasis {w_k}. The map is
/// ordered so iteration (and everything downstream, including file output)
/// is deterministic.
class CoefficientVector {
public:
    CoefficientVector() = default;
    CoefficientVector(std::initializer_list<std::pair<const Index, double>> entries) {
        for (const auto& [k, v] : entries) set(k, v);
    }

    double get(Index k) const;
    void set(Index k, double value);   // value 0 erases the entry
    void add(Index k, double value);

    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    const std::map<Index, double>& entries() const { return entries_; }

    /// Largest supported index; 0 for the empty vector.
    Index max_index() const;

    CoefficientVector operator-(const CoefficientVector& other) const;
    CoefficientVector operator+(const CoefficientVector& other) const;
    CoefficientVector scaled(double factor) const;

    bool operator==(const CoefficientVector&) const = default;

private:
    std::map<Index, double> entries_;
};

/// Euclidean norm of the entries (Parseval).
double h_norm(const CoefficientVector& v);

/// Weighted norm with weights xi_k: sqrt(sum xi_k^2 v_k^2).
double w_norm(const SpectralProblem& problem, const CoefficientVector& v);

/// A coefficient vector observed with noise of known radius in the H-norm.
struct NoisyObservation {
    CoefficientVector coeffs;
    double delta;

    NoisyObservation(CoefficientVector c, double d);
};

}  // namespace specrec
