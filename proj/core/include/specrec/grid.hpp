#pragma once

#include <vector>

#include "specrec/sequence.hpp"

namespace specrec {

/// Samples of a function on a uniform grid over [x0, x0 + length), periodic
/// extension implied. Sample j sits at x0 + j * length / size; the right
/// endpoint is omitted, making the rectangle rule the trapezoid rule.
struct GridFunction {
    std::vector<double> samples;
    double x0 = 0.0;
    double length = 0.0;

    double x(Index j) const { return x0 + length * static_cast<double>(j) / static_cast<double>(samples.size()); }
    Index size() const { return samples.size(); }
};

/// Uniform grid over [0, 2*pi) with n samples.
GridFunction make_periodic_grid(Index n);

/// L_q norm over the grid's domain by the rectangle rule, spectrally
/// accurate for smooth periodic integrands. q = infinity returns the grid
/// max of |samples| (an O(h^2) approximation of the sup-norm for smooth
/// functions). Requires q >= 2 or q = infinity and at least 2 samples.
double lq_norm(const GridFunction& g, double q);

}  // namespace specrec
