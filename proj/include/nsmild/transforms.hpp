#pragma once

#include "nsmild/field.hpp"

namespace nsmild {

// Coefficient convention: F(n) = N^-3 sum_x f(x) e^{-ik.x}, k = 2 pi n / L,
// so a unit cosine mode carries coefficient 1/2 at +-n.
SpectralField forward_transform(const VectorField& f);

// Checks Hermitian symmetry to 1e-10 x max modulus, discards the imaginary
// residue after verifying it is below 1e-10 x field scale.
VectorField inverse_transform(const SpectralField& F);

ScalarSpectral forward_transform_scalar(const GridSpec& grid, const std::vector<double>& f);
std::vector<double> inverse_transform_scalar(const ScalarSpectral& F);

// Coefficient at k is i k . F(k).
ScalarSpectral spectral_divergence(const SpectralField& F);

// Component j of the spectral gradient of a scalar: i k_j p(k).
SpectralField spectral_gradient(const ScalarSpectral& p);

// max_k |k| |F(k)| over components, the gradient scale used by the
// divergence-free tolerance.
double gradient_coefficient_scale(const SpectralField& F);

// True when spectral divergence max modulus <= tol x gradient scale.
bool is_divergence_free(const VectorField& f, double tol = 1e-10);
double divergence_defect_ratio(const SpectralField& F);

// Physical-space wavenumber of lattice point idx along one axis.
inline double wavenumber(int idx, int n, double box_length) {
    return 2.0 * 3.14159265358979323846 * signed_mode(idx, n) / box_length;
}

} // namespace nsmild
