#pragma once

#include "nsmild/field.hpp"

namespace nsmild {

// Riemann-sum L^p norm with the cell measure (L/N)^m, Euclidean modulus over
// components; p = infinity (use lp_infinity) gives the max modulus.
double lp_norm(const VectorField& f, double p);
inline constexpr double lp_infinity = -1.0;  // sentinel accepted by lp_norm

double lp_norm_scalar(const GridSpec& grid, const std::vector<double>& f, double p);

// L^2 inner product (a, b) = sum a.b (L/N)^m.
double inner_product(const VectorField& a, const VectorField& b);

double l2_norm(const VectorField& f);

// Spectral route to the same quantities (Parseval with the lattice measure
// L^m sum |F|^2).
double l2_norm_spectral(const SpectralField& F);
double inner_product_spectral(const SpectralField& A, const SpectralField& B);

// (grad a, grad b) = L^m sum |k|^2 Re(A . conj(B)).
double gradient_inner_product_spectral(const SpectralField& A, const SpectralField& B);

// Sobolev H^s norm, spectral: sqrt(L^m sum (1+|k|^2)^s |F|^2).
double sobolev_norm_spectral(const SpectralField& F, double s);

// Fraction of the L^2 mass carried by the central half-box
// [L/4, 3L/4)^3.
double central_halfbox_mass_fraction(const VectorField& f);

} // namespace nsmild
