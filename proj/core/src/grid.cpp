#include "specrec/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace specrec {

GridFunction make_periodic_grid(Index n) {
    if (n < 2) throw std::invalid_argument("grid needs at least 2 samples");
    GridFunction g;
    g.samples.assign(n, 0.0);
    g.x0 = 0.0;
    g.length = 2.0 * M_PI;
    return g;
}

double lq_norm(const GridFunction& g, double q) {
    if (g.samples.size() < 2) throw std::invalid_argument("grid needs at least 2 samples");
    if (std::isinf(q)) {
        double top = 0.0;
        for (const double s : g.samples) top = std::max(top, std::abs(s));
        return top;
    }
    if (!(q >= 2.0)) throw std::invalid_argument("q must be >= 2 (or infinity)");
    const double h = g.length / static_cast<double>(g.samples.size());
    double sum = 0.0;
    for (const double s : g.samples) sum += std::pow(std::abs(s), q);
    return std::pow(h * sum, 1.0 / q);
}

}  // namespace specrec
