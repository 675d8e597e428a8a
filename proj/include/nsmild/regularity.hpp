#pragma once

#include <array>
#include <string>
#include <vector>

#include "nsmild/field.hpp"
#include "nsmild/solver.hpp"

namespace nsmild {

// Log-log regression record for Holder exponent estimates.
struct HolderFit {
    std::vector<double> offsets;  // strictly decreasing, > 0
    std::vector<double> norms;
    double slope = 0.0;           // least squares on (log h, log norm)
    double fit_residual = 0.0;    // rms residual of the fit
    std::string descriptor;
    bool degenerate = false;      // fewer than 3 nonzero norms
};

// v(t) = u(t) - e^{tD} u0; zero at t = 0.
VectorField compute_fluctuation(const Trajectory& traj, double t);

// || (I-D)^{r/2} v ||_1 for r in [0, 1).
double l1r_norm(const VectorField& v, double r);

// Norms ||v(t+h) - v(t)||_{L^1_r} over the offset ladder; offsets must land
// on stored trajectory times.
HolderFit temporal_holder_fit(const Trajectory& traj, double t, double r,
                              const std::vector<double>& offsets);

// Norms ||v(.+h) - v||_p against |h|^r ||v||_{L^p_r}; p restricted to
// [1, m/(m-1+r)).  Returns the fit plus the ratio ladder in 'norms' order.
struct SpatialHolderResult {
    HolderFit fit;
    std::vector<double> ratios;   // norm / (|h|^r ||v||_{L^p_r})
    double fitted_c = 0.0;        // max ratio
};
SpatialHolderResult spatial_holder_fit(const VectorField& v, double p, double r,
                                       const std::vector<std::array<double, 3>>& offsets);

// ||(I - e^{hD})(I-D)^{-eps} f||_1 / ||f||_1 for each h.  The explicit bound
// 2 h^eps / Gamma(1+eps) is asserted by callers.
std::vector<double> smoothing_difference_check(const VectorField& f, double epsilon,
                                               const std::vector<double>& h_values);

struct InterpolationRecord {
    double lp = 0.0;
    double bound = 0.0;  // ||v||_1^theta ||v||_2^{1-theta}, theta = 2(1/p - 1/2)
    double ratio = 0.0;
    bool degenerate = false;
};
InterpolationRecord interpolation_check(const VectorField& v, double p);

} // namespace nsmild
