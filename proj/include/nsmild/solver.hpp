#pragma once

#include <string>
#include <vector>

#include "nsmild/field.hpp"

namespace nsmild {

enum class Scheme { exponential_trapezoid, exponential_euler };

std::string scheme_name(Scheme s);

struct SolverConfig {
    double step = 1.0 / 256.0;         // delta
    double final_time = 0.5;           // T
    double inner_tolerance = 1e-10;    // relative, Picard fixed point
    int max_inner_iterations = 50;
    Scheme scheme = Scheme::exponential_trapezoid;
    bool include_nonlinearity = true;

    void validate() const;
};

// Discrete trajectory of the perturbation equation: states at t_n = n*delta,
// all on one grid, state 0 equal to the initial condition.
struct Trajectory {
    GridSpec grid;
    std::vector<double> times;
    std::vector<VectorField> states;
    std::string scheme;                  // step metadata
    std::vector<int> inner_iterations;   // step metadata
    double initial_mass_fraction = 0.0;  // central half-box diagnostic
    bool mass_fraction_warning = false;  // fraction < 99.9%
    bool resolution_warning = false;     // spectral tail > 1% of enstrophy

    int index_of_time(double t) const;   // -1 if t is not a stored time
    const VectorField& state_at(double t) const;
};

// One step of the exponential integrator on [t_n, t_n + delta].  The Duhamel
// integral is approximated by the configured rule; the trapezoid version is
// solved by fixed-point iteration to cfg.inner_tolerance.  The Leray
// projector is applied to every quadrature node.
VectorField advance_step(const VectorField& u_n, double t_n, const SolverConfig& cfg,
                         int* iterations_out = nullptr);

Trajectory solve_trajectory(const VectorField& u0, const SolverConfig& cfg);

// Relative mild-equation defect
//   ||u(t) - e^{tD}u0 + P int_0^t e^{(t-s)D}(u.grad u)(s) ds||_2 / ||u(t)||_2
// with the integral evaluated by composite trapezoid on each stored interval
// subdivided 'refinement' times, states interpolated linearly in t.  Pass
// include_nonlinearity = false for trajectories solved with the nonlinear
// term disabled (the integral drops).
double duhamel_residual(const Trajectory& traj, double t, int refinement,
                        bool include_nonlinearity = true);

} // namespace nsmild
