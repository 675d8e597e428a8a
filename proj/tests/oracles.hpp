#pragma once

#include <functional>

// Test-side oracles, independent of the production quadrature and transforms.
namespace oracles {

// Recursive adaptive Simpson.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

// Tanh-sinh (double-exponential) rule on a finite interval.
double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol);

// Closed form of the sine-form kernel at m = 3, n = 0, r = 0 (any t):
//   g(w) = (2/w^2) [ (pi/2) erf(w/2) - (sqrt(pi)/2) w e^{-w^2/4} ].
double g_closed_m3_r0(double w);

// Closed form of the reduced heat-shift integral: 2 erf(w/2).
double heat_shift_closed(double w);

// L1 mass of a scalar Gaussian bump amp * exp(-|x|^2/(2 sigma^2)) on R^3.
double gaussian_l1_mass(double sigma, double amp);

} // namespace oracles
