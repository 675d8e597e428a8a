#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsmild/field.hpp"
#include "nsmild/solver.hpp"

namespace nsmild {

enum class TestClass { product_class, t1, t_chi };

std::string test_class_name(TestClass c);

// Smooth compactly supported bump on [0, T): (1 - ((s-center)/width)^2)^order
// inside |s - center| < width, zero outside.  C^{order-1} at the edges.
struct TemporalBump {
    double center = 0.0;
    double width = 1.0;
    int order = 8;

    double value(double s) const;
    double derivative(double s) const;
    double support_end() const { return center + width; }
};

// Space-time divergence-free test field phi(s,x) = sum_b alpha_b(s) phi_b(x).
// product_class uses one term with phi = curl of a random localized
// potential; t1 uses two terms; t_chi uses P(chi_r f) spatial parts.
struct TestFunction {
    GridSpec grid;
    TestClass cls;
    double horizon;  // T
    double chi_r = 0.0;
    std::uint64_t seed = 0;
    std::vector<TemporalBump> bumps;
    std::vector<VectorField> spatial;

    std::size_t terms() const { return bumps.size(); }
    std::string id() const;
};

// Deterministic for fixed (seed, class, grid, T).  Temporal support is kept
// strictly inside [0, T - margin] with margin = 0.05 T.
TestFunction generate_test_function(std::uint64_t seed, TestClass cls, const GridSpec& grid,
                                    double T, double chi_r = 0.01);

struct WeakResidualReport {
    std::string test_id;
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;    // |lhs - rhs|
    double scale = 0.0;  // sum of |constituents|
};

// Evaluates
//   int_0^t [-(u,ds phi) + (grad u, grad phi) + (u.grad u, phi)] ds
//   vs (u0, phi(0)) - (u(t), phi(t))
// with trapezoid quadrature on the stored trajectory times and analytic
// temporal derivatives of phi.
WeakResidualReport weak_residual(const Trajectory& traj, const TestFunction& phi, double t,
                                 bool include_nonlinearity = true);

// Precomputes per-time pairings for a batch of test functions in one pass
// over the trajectory; residual evaluations are then cheap scalar sums.
class WeakFormEvaluator {
public:
    WeakFormEvaluator(const Trajectory& traj, std::vector<TestFunction> phis,
                      bool include_nonlinearity = true);
    WeakResidualReport residual(std::size_t phi_index, double t) const;
    std::size_t count() const { return phis_.size(); }

private:
    struct Series {
        std::vector<double> u_phi, gu_gphi, n_phi;
    };
    const Trajectory& traj_;
    std::vector<TestFunction> phis_;
    bool nonlinearity_;
    std::vector<std::vector<Series>> table_;  // [phi][basis]
};

// (u(t_n) - u(t), f)_2 for each approach time.
std::vector<double> weak_continuity_probe(const Trajectory& traj, const VectorField& f, double t,
                                          const std::vector<double>& approach);

} // namespace nsmild
