#pragma once

#include <functional>
#include <vector>

namespace nsmild {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimate
    long evaluations = 0;
};

// Adaptive Gauss-Kronrod 15(7) on [a, b].  Throws QuadratureError when the
// tolerance cannot be met within the panel budget.
QuadratureResult adaptive_gk(const std::function<double(double)>& f, double a, double b,
                             double tol, int max_depth = 48);

// Same rule but the initial partition is tied to the oscillation scale:
// panels of width ~ pi/omega when omega*(b-a) is large.
QuadratureResult adaptive_gk_oscillatory(const std::function<double(double)>& f, double a,
                                         double b, double omega, double tol);

// Gauss-Legendre nodes/weights on [0, 1], computed by Newton iteration and
// cached per n.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre_unit(int n);

} // namespace nsmild
