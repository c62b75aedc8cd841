#pragma once

#include "specrec/coefficients.hpp"
#include "specrec/grid.hpp"

namespace specrec {

/// The orthonormal trigonometric basis of zero-mean periodic functions:
/// w_{2k} = cos((k+1)x)/sqrt(pi), w_{2k+1} = sin((k+1)x)/sqrt(pi).
double basis_function(Index k, double x);

/// Frequency (k+1) carried by basis index k.
Index basis_frequency(Index k);

/// Coefficients of the sampled signal in the normalized basis, via a radix-2
/// FFT and rectangle-rule quadrature. The mean is removed; frequencies at or
/// beyond Nyquist are absent. Requires a power-of-two sample count >= 4 over
/// a full period.
CoefficientVector analyze(const GridFunction& samples);

/// Pointwise evaluation of sum c_k w_k on a fresh n-point grid over [0,2*pi).
GridFunction synthesize(const CoefficientVector& coeffs, Index n_samples);

/// Same, on the given grid.
GridFunction synthesize_on(const CoefficientVector& coeffs, const GridFunction& like);

}  // namespace specrec
