#pragma once

#include <array>
#include <vector>

#include "nsmild/field.hpp"

// Serial reference implementations, independent of the production kernels.
// Kept for tests (oracles) and for the benchmark target.
namespace nsmild::reference {

// Naive O(n^2) DFT of one line, forward sign e^{-2 pi i jk/n}.
void dft_line(const std::vector<cplx>& in, std::vector<cplx>& out, bool inverse);

// Full 3D transform built on dft_line, serial, including the 1/N^3 forward
// normalization of forward_transform.
SpectralField forward_transform_naive(const VectorField& f);
VectorField inverse_transform_naive(const SpectralField& F);

// Centered second-order finite-difference divergence on the periodic grid.
std::vector<double> finite_difference_divergence(const VectorField& f);

// Translation by an on-grid shift via index rotation (exact).
VectorField translate_by_cells(const VectorField& f, const std::array<int, 3>& cells);

// Direct spectral convolution s = FFT(u . grad u) restricted to the
// dealiased band, O(n_modes^2); usable only for small N.
SpectralField nonlinear_spectral_direct(const SpectralField& u_hat);

// Serial twins of parallel kernels (same algorithm, no OpenMP) used by the
// benchmark for speedup comparison.
double lp_norm_serial(const VectorField& f, double p);
void heat_multiplier_serial(SpectralField& F, double t);

} // namespace nsmild::reference
