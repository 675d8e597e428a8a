#pragma once

#include <array>
#include <complex>
#include <vector>

#include "nsmild/grid.hpp"

namespace nsmild {

using cplx = std::complex<double>;

// Real vector field sampled on the grid, row-major (i fastest-varying last):
// flat index = (i1*N + i2)*N + i3, sample coordinate x_a = idx_a * L/N.
struct VectorField {
    GridSpec grid;
    std::array<std::vector<double>, 3> comp;

    explicit VectorField(const GridSpec& g);
    static VectorField zeros(const GridSpec& g) { return VectorField(g); }

    std::size_t size() const { return comp[0].size(); }
    bool all_finite() const;
};

// Fourier coefficients of a real vector field over the full wavenumber
// lattice, same storage layout as VectorField with signed modes per axis.
struct SpectralField {
    GridSpec grid;
    std::array<std::vector<cplx>, 3> comp;

    explicit SpectralField(const GridSpec& g);

    std::size_t size() const { return comp[0].size(); }
    double max_modulus() const;
    // max |F(-k) - conj(F(k))| over lattice and components.
    double hermitian_defect() const;
};

// Scalar spectral data (divergence, potentials).
struct ScalarSpectral {
    GridSpec grid;
    std::vector<cplx> coeff;

    explicit ScalarSpectral(const GridSpec& g);
    double max_modulus() const;
};

// y = a*x + y
void axpy(double a, const VectorField& x, VectorField& y);
void scale(VectorField& f, double a);
VectorField linear_combination(double a, const VectorField& x, double b, const VectorField& y);

void axpy_spectral(cplx a, const SpectralField& x, SpectralField& y);

} // namespace nsmild
