#include "oracles.hpp"

#include <cmath>

namespace oracles {

namespace {

double simpson_panel(double a, double fa, double b, double fb, double fc) {
    return (b - a) / 6.0 * (fa + 4.0 * fc + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double c, double fc, double whole, double tol, int depth) {
    const double m1 = 0.5 * (a + c), m2 = 0.5 * (c + b);
    const double f1 = f(m1), f2 = f(m2);
    const double left = simpson_panel(a, fa, c, fc, f1);
    const double right = simpson_panel(c, fc, b, fb, f2);
    if (depth > 60 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, fa, c, fc, m1, f1, left, tol * 0.5, depth + 1) +
           simpson_rec(f, c, fc, b, fb, m2, f2, right, tol * 0.5, depth + 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    const double c = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fc = f(c);
    return simpson_rec(f, a, fa, b, fb, c, fc, simpson_panel(a, fa, b, fb, fc), tol, 0);
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
    // x = c + d tanh((pi/2) sinh t); each level halves the node spacing and
    // recomputes (simple, test-side only)
    const double c = 0.5 * (a + b), d = 0.5 * (b - a);
    const double pi_half = 1.57079632679489661923;
    double h = 0.5;
    double prev = 0.0, result = 0.0;
    for (int level = 0; level < 11; ++level) {
        double sum = 0.0;
        for (double t = -6.5; t <= 6.5 + 1e-12; t += h) {
            const double sinh_t = std::sinh(t);
            const double cosh_ps = std::cosh(pi_half * sinh_t);
            const double w = pi_half * std::cosh(t) / (cosh_ps * cosh_ps);
            const double x = std::tanh(pi_half * sinh_t);
            sum += w * f(c + d * x);
        }
        result = d * h * sum;
        if (level > 1 && std::abs(result - prev) < tol) break;
        prev = result;
        h *= 0.5;
    }
    return result;
}

double g_closed_m3_r0(double w) {
    if (w == 0.0) return 0.0;
    const double pi = 3.14159265358979323846;
    return 2.0 / (w * w) *
           (0.5 * pi * std::erf(0.5 * w) - 0.5 * std::sqrt(pi) * w * std::exp(-0.25 * w * w));
}

double heat_shift_closed(double w) { return 2.0 * std::erf(0.5 * w); }

double gaussian_l1_mass(double sigma, double amp) {
    const double pi = 3.14159265358979323846;
    return std::abs(amp) * std::pow(2.0 * pi * sigma * sigma, 1.5);
}

} // namespace oracles
