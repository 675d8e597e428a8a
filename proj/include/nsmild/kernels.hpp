#pragma once

namespace nsmild {

// Query for the scalar radial kernels: dimension m >= 3, Bessel-potential
// exponent r >= 0, time t >= 0, derivative order n >= 0, radial argument
// w = |y| with y = x/sqrt(t).
struct KernelQuery {
    int m = 3;
    double r = 0.0;
    double t = 0.0;
    int n = 0;
    double w = 0.0;
};

struct KernelResult {
    double value = 0.0;
    double error = 0.0;   // estimated quadrature error
    double s_max = 0.0;   // truncation radius used
};

// Real sine-form oscillatory kernel
//   g(w) = int_0^inf (t+s^2)^{r/2} s^{m-2} e^{-s^2}
//          [ 2 int_0^1 sin(s w l) l (1-l^2)^{(m-3)/2} dl ] ds,
// derivative order n inserting (s l)^n and rotating sin -> cos by parity.
// The unspecified constant in the assembled kernel absorbs the factor i of
// the complex-phase form.
KernelResult eval_g(const KernelQuery& q, double tol);

// Cosine-form companion kernel (even integrand, s^{m-1}, no l factor):
//   h(w) = int_0^inf (t+s^2)^{r/2} s^{m-1} e^{-s^2}
//          [ 2 int_0^1 cos(s w l) (1-l^2)^{(m-3)/2} dl ] ds.
KernelResult eval_h(const KernelQuery& q, double tol);

// Bessel-potential kernel k_w at radius |x|:
//   k_w(x) = Gamma(w/2)^{-1} int_0^inf e^{-t} t^{(w-2)/2} K_t(x) dt,
// K_t the m-dimensional Gaussian.  Endpoint singularity handled by t = tau^2.
KernelResult eval_bessel_kernel(int m, double w_order, double x_radius, double tol);

// Total mass int k_w dx by radial quadrature (should be 1).
KernelResult bessel_kernel_mass(int m, double w_order, double tol);

// Bracketed combination of the assembled kernel at direction e1:
//   omega_i omega_j g'(w) + w^{-1}(delta_ij - omega_i omega_j) g(w).
KernelResult assemble_ipk_kernel(int i, int j, const KernelQuery& q, double tol);

// L1 distance between shifted heat kernels, reduced to 1D:
//   pi^{-1/2} int |e^{-(s+w/2)^2} - e^{-(s-w/2)^2}| ds,  w = lambda/(2 sqrt t).
KernelResult heat_shift_l1(double t, double lambda, double tol);

// Translation-operator bound integral
//   int_0^inf e^{-t} t^{r/2} (w/(1+w)) dt/t,  w = lambda/(2 sqrt t).
KernelResult translation_bound_integral(double r, double lambda, double tol);

} // namespace nsmild
