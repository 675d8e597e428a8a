#include "nsmild/kernels.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/quadrature.hpp"

namespace nsmild {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const KernelQuery& q) {
    if (q.m < 3) throw DomainError("kernel query: m must be >= 3");
    if (q.r < 0.0) throw DomainError("kernel query: r must be >= 0");
    if (q.t < 0.0) throw DomainError("kernel query: t must be >= 0");
    if (q.n < 0) throw DomainError("kernel query: n must be >= 0");
    if (q.w < 0.0) throw DomainError("kernel query: w must be >= 0");
}

double s_truncation(double tol) {
    return std::max(6.0, std::sqrt(std::log(1.0 / std::min(tol, 0.1))));
}

// 2 int_0^1 sin(x l + n pi/2) l^{n+1} (1-l^2)^{(m-3)/2} dl
double inner_g(double x, int m, int n, double tol) {
    const double half = 0.5 * (m - 3);
    const double phase = 0.5 * kPi * n;
    auto f = [x, n, half, phase](double l) {
        double base = 2.0 * std::sin(x * l + phase) * std::pow(l, n + 1);
        if (half != 0.0) base *= std::pow(1.0 - l * l, half);
        return base;
    };
    return adaptive_gk_oscillatory(f, 0.0, 1.0, std::abs(x), tol).value;
}

// 2 int_0^1 cos(x l) (1-l^2)^{(m-3)/2} dl
double inner_h(double x, int m, double tol) {
    const double half = 0.5 * (m - 3);
    auto f = [x, half](double l) {
        double base = 2.0 * std::cos(x * l);
        if (half != 0.0) base *= std::pow(1.0 - l * l, half);
        return base;
    };
    return adaptive_gk_oscillatory(f, 0.0, 1.0, std::abs(x), tol).value;
}

} // namespace

KernelResult eval_g(const KernelQuery& q, double tol) {
    validate(q);
    if (!(tol > 0.0)) throw DomainError("eval_g: tol must be positive");
    KernelResult res;
    res.s_max = s_truncation(tol);
    if (q.w == 0.0 && q.n % 2 == 0) return res;  // odd lambda-integrand: exact zero

    const double inner_tol = tol * 1e-2;
    const int m = q.m, n = q.n;
    const double r = q.r, t = q.t, w = q.w;
    auto outer = [&](double s) {
        const double weight =
            std::pow(t + s * s, 0.5 * r) * std::pow(s, m - 2 + n) * std::exp(-s * s);
        if (weight == 0.0) return 0.0;
        return weight * inner_g(s * w, m, n, inner_tol);
    };
    const QuadratureResult outer_res = adaptive_gk(outer, 0.0, res.s_max, tol);
    res.value = outer_res.value;
    res.error = outer_res.error + inner_tol;
    return res;
}

KernelResult eval_h(const KernelQuery& q, double tol) {
    validate(q);
    if (q.n != 0) throw DomainError("eval_h: derivative order must be 0");
    if (!(tol > 0.0)) throw DomainError("eval_h: tol must be positive");
    KernelResult res;
    res.s_max = s_truncation(tol);
    const double inner_tol = tol * 1e-2;
    const int m = q.m;
    const double r = q.r, t = q.t, w = q.w;
    auto outer = [&](double s) {
        const double weight =
            std::pow(t + s * s, 0.5 * r) * std::pow(s, m - 1) * std::exp(-s * s);
        if (weight == 0.0) return 0.0;
        return weight * inner_h(s * w, m, inner_tol);
    };
    const QuadratureResult outer_res = adaptive_gk(outer, 0.0, res.s_max, tol);
    res.value = outer_res.value;
    res.error = outer_res.error + inner_tol;
    return res;
}

KernelResult eval_bessel_kernel(int m, double w_order, double x_radius, double tol) {
    if (m < 3) throw DomainError("eval_bessel_kernel: m must be >= 3");
    if (!(w_order > 0.0 && w_order < 1.0))
        throw DomainError("eval_bessel_kernel: order must lie in (0,1)");
    if (!(x_radius > 0.0)) throw DomainError("eval_bessel_kernel: radius must be positive");
    if (!(tol > 0.0)) throw DomainError("eval_bessel_kernel: tol must be positive");

    // t = tau^2 soaks up the endpoint singularity t^{(w-2)/2}
    const double c = 2.0 / std::tgamma(0.5 * w_order) * std::pow(4.0 * kPi, -0.5 * m);
    const double rho2 = 0.25 * x_radius * x_radius;
    auto f = [m, w_order, rho2](double tau) {
        if (tau == 0.0) return 0.0;
        return std::pow(tau, w_order - 1.0 - m) * std::exp(-tau * tau - rho2 / (tau * tau));
    };
    KernelResult res;
    res.s_max = std::sqrt(std::log(1.0 / std::min(tol, 0.1))) + 2.0;
    const QuadratureResult quad = adaptive_gk(f, 0.0, res.s_max, tol / std::max(c, 1.0), 52);
    res.value = c * quad.value;
    res.error = c * quad.error;
    return res;
}

KernelResult bessel_kernel_mass(int m, double w_order, double tol) {
    if (m < 3) throw DomainError("bessel_kernel_mass: m must be >= 3");
    if (!(w_order > 0.0 && w_order < 1.0))
        throw DomainError("bessel_kernel_mass: order must lie in (0,1)");
    const double sphere = 2.0 * std::pow(kPi, 0.5 * m) / std::tgamma(0.5 * m);
    // rho = sigma^2 removes the rho^{w-m} singularity from the radial measure
    auto f = [&](double sigma) {
        const double rho = sigma * sigma;
        if (rho == 0.0) return 0.0;
        const double k = eval_bessel_kernel(m, w_order, rho, tol * 1e-2).value;
        return 2.0 * k * std::pow(rho, m - 1) * sigma;
    };
    const double rho_max = 45.0;
    KernelResult res;
    res.s_max = std::sqrt(rho_max);
    const QuadratureResult quad = adaptive_gk(f, 0.0, res.s_max, tol / sphere, 40);
    res.value = sphere * quad.value;
    res.error = sphere * quad.error;
    return res;
}

KernelResult assemble_ipk_kernel(int i, int j, const KernelQuery& q, double tol) {
    validate(q);
    if (i < 1 || i > q.m || j < 1 || j > q.m)
        throw DomainError("assemble_ipk_kernel: component indices must lie in [1, m]");
    if (!(q.w > 0.0)) throw DomainError("assemble_ipk_kernel: direction undefined at w = 0");

    // direction convention omega = e1
    const double wij = (i == 1 && j == 1) ? 1.0 : 0.0;
    const double delta = (i == j) ? 1.0 : 0.0;

    KernelQuery q0 = q;
    q0.n = 0;
    KernelQuery q1 = q;
    q1.n = 1;
    KernelResult res;
    double err = 0.0;
    double value = 0.0;
    if (wij != 0.0) {
        const KernelResult gp = eval_g(q1, tol);
        value += wij * gp.value;
        err += gp.error;
        res.s_max = gp.s_max;
    }
    if (delta - wij != 0.0) {
        const KernelResult g = eval_g(q0, tol);
        value += (delta - wij) * g.value / q.w;
        err += g.error / q.w;
        res.s_max = g.s_max;
    }
    res.value = value;
    res.error = err;
    return res;
}

KernelResult heat_shift_l1(double t, double lambda, double tol) {
    if (!(t > 0.0)) throw DomainError("heat_shift_l1: t must be positive");
    if (lambda < 0.0) throw DomainError("heat_shift_l1: lambda must be >= 0");
    if (!(tol > 0.0)) throw DomainError("heat_shift_l1: tol must be positive");
    KernelResult res;
    if (lambda == 0.0) return res;
    const double w = lambda / (2.0 * std::sqrt(t));
    // the integrand |e^{-(s+w/2)^2} - e^{-(s-w/2)^2}| changes sign at s = 0
    // only; fold to [0, inf) where the first Gaussian dominates
    auto f = [w](double s) {
        const double a = s - 0.5 * w, b = s + 0.5 * w;
        return std::exp(-a * a) - std::exp(-b * b);
    };
    res.s_max = 0.5 * w + std::sqrt(std::log(1.0 / std::min(tol, 0.1))) + 2.0;
    const QuadratureResult quad = adaptive_gk(f, 0.0, res.s_max, tol);
    const double c = 2.0 / std::sqrt(kPi);
    res.value = c * quad.value;
    res.error = c * quad.error;
    return res;
}

KernelResult translation_bound_integral(double r, double lambda, double tol) {
    if (!(r > 0.0)) throw DomainError("translation_bound_integral: r must be positive");
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw DomainError("translation_bound_integral: lambda must lie in (0, 1]");
    if (!(tol > 0.0)) throw DomainError("translation_bound_integral: tol must be positive");
    // I = 2 int_0^inf e^{-tau^2} tau^{r-1} lambda/(2 tau + lambda) dtau, then
    // tau = u^{1/r} flattens the endpoint power
    const double inv_r = 1.0 / r;
    auto f = [inv_r, lambda](double u) {
        if (u == 0.0) return 1.0;  // limit value
        const double tau = std::pow(u, inv_r);
        return std::exp(-std::pow(u, 2.0 * inv_r)) * lambda / (2.0 * tau + lambda);
    };
    KernelResult res;
    res.s_max = std::pow(std::log(1.0 / std::min(tol, 0.1)), 0.5 * r) + 1.0;
    const QuadratureResult quad = adaptive_gk(f, 0.0, res.s_max, tol * r / 2.0, 52);
    res.value = (2.0 / r) * quad.value;
    res.error = (2.0 / r) * quad.error;
    return res;
}

} // namespace nsmild
