#include "specrec/fourier.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace specrec {

namespace {

bool is_pow2(Index n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 FFT, twiddles by direct trig for accuracy.
void fft_inplace(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const double phi = ang * static_cast<double>(j);
                const std::complex<double> w(std::cos(phi), std::sin(phi));
                const auto u = a[i + j];
                const auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

const double kSqrtPi = std::sqrt(M_PI);

}  // namespace

Index basis_frequency(Index k) { return k / 2 + 1; }

double basis_function(Index k, double x) {
    const double mx = static_cast<double>(basis_frequency(k)) * x;
    return (k % 2 == 0 ? std::cos(mx) : std::sin(mx)) / kSqrtPi;
}

CoefficientVector analyze(const GridFunction& g) {
    const Index n = g.size();
    if (n < 4) throw std::invalid_argument("analysis needs at least 4 samples");
    if (!is_pow2(n)) throw std::invalid_argument("analysis needs a power-of-two sample count");

    std::vector<std::complex<double>> a(n);
    for (Index j = 0; j < n; ++j) a[j] = g.samples[j];
    fft_inplace(a);

    // Frequency m carries cosine weight 2 Re F_m / n and sine weight
    // -2 Im F_m / n; the mean (m = 0) is dropped, as is everything at or
    // beyond Nyquist.
    CoefficientVector coeffs;
    for (Index m = 1; m < n / 2; ++m) {
        const double cos_part = 2.0 * a[m].real() / static_cast<double>(n);
        const double sin_part = -2.0 * a[m].imag() / static_cast<double>(n);
        coeffs.set(2 * (m - 1), kSqrtPi * cos_part);
        coeffs.set(2 * (m - 1) + 1, kSqrtPi * sin_part);
    }
    return coeffs;
}

GridFunction synthesize_on(const CoefficientVector& coeffs, const GridFunction& like) {
    GridFunction out = like;
    for (Index j = 0; j < out.size(); ++j) {
        const double x = out.x(j);
        double sum = 0.0;
        for (const auto& [k, v] : coeffs.entries()) sum += v * basis_function(k, x);
        out.samples[j] = sum;
    }
    return out;
}

GridFunction synthesize(const CoefficientVector& coeffs, Index n_samples) {
    return synthesize_on(coeffs, make_periodic_grid(n_samples));
}

}  // namespace specrec
