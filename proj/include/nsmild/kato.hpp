#pragma once

#include <array>

#include "nsmild/field.hpp"

namespace nsmild {

// Logarithmic cutoff z_R(x) = ztilde(R^{-1} log(|x|^2 + 1)) built on a
// polynomial smoothstep that is exactly 1 for arguments <= 1 and exactly 0
// for arguments >= 2.  Radial coordinates are measured from the box center.
struct CutoffProfile {
    double R;

    explicit CutoffProfile(double R_);

    // transition profile on [1,2]; order-5 smoothstep (C^5 joins)
    static double ztilde(double tau);
    static double ztilde_prime(double tau);

    double z(double radius) const;
    // d z_R / d x_i at centered position x
    std::array<double, 3> grad_z(const std::array<double, 3>& x) const;

    double plateau_radius() const;  // sqrt(e^R - 1)
    double support_radius() const;  // sqrt(e^{2R} - 1)
};

// Ray integral Q_k(f)(x) = int_0^1 t^{m-1-k} f(t x) dt (x centered), by
// Gauss-Legendre quadrature with spectral interpolation of f along the ray.
std::array<double, 3> ray_moment(int k, const VectorField& f, const std::array<double, 3>& x,
                                 int quadrature_nodes = 64);

// Same integral for every grid point via the closed-form modal t-integral
// (exact for band-limited f; the limit of the Gauss-Legendre rule).
// component_count = 1 treats input as scalar.
std::vector<std::array<double, 3>> ray_moment_grid(int k, const VectorField& f);
std::vector<double> ray_moment_grid_scalar(int k, const GridSpec& grid,
                                           const std::vector<double>& f);

// Kato approximation f_R = z_R f + grad z_R . (x ^ Q_1(f)); identically zero
// outside the support radius, divergence-free whenever f is.
VectorField kato_approximate(const VectorField& f, const CutoffProfile& profile);

// Max-norm residual of the divergence identity
//   div f_R = z_R div f + (x . grad z_R) Q_0(div f)
// normalized by the max modulus of its constituents.  Valid for any f.
double divergence_identity_residual(const VectorField& f, const CutoffProfile& profile);

// Throws GeometryError unless e^{2R} - 1 < (L/2)^2.
void check_kato_geometry(const GridSpec& grid, const CutoffProfile& profile);

} // namespace nsmild
