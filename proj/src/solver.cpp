#include "nsmild/solver.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/norms.hpp"
#include "nsmild/operators.hpp"
#include "nsmild/parallel.hpp"
#include "nsmild/transforms.hpp"

namespace nsmild {

std::string scheme_name(Scheme s) {
    return s == Scheme::exponential_trapezoid ? "exponential_trapezoid" : "exponential_euler";
}

void SolverConfig::validate() const {
    if (!(step > 0.0)) throw DomainError("SolverConfig: step must be positive");
    if (!(final_time > 0.0)) throw DomainError("SolverConfig: final_time must be positive");
    if (step > final_time) throw DomainError("SolverConfig: step must not exceed final_time");
    if (!(inner_tolerance > 0.0)) throw DomainError("SolverConfig: inner_tolerance must be positive");
    if (max_inner_iterations < 1)
        throw DomainError("SolverConfig: max_inner_iterations must be >= 1");
}

int Trajectory::index_of_time(double t) const {
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - t) <= 1e-12 * std::max(1.0, std::abs(t)))
            return static_cast<int>(i);
    return -1;
}

const VectorField& Trajectory::state_at(double t) const {
    const int i = index_of_time(t);
    if (i < 0) throw DomainError("Trajectory: t is not a stored time");
    return states[static_cast<std::size_t>(i)];
}

namespace {

// P(dealiased FFT(u.grad u)), mean mode kept exactly zero.
SpectralField projected_nonlinear(const SpectralField& u_hat) {
    SpectralField n_hat = nonlinear_spectral(u_hat);
    apply_multiplier(n_hat, MultiplierSpec::leray());
    for (int c = 0; c < 3; ++c) n_hat.comp[c][0] = cplx(0.0, 0.0);
    return n_hat;
}

SpectralField heat_copy(const SpectralField& f, double t) {
    SpectralField out = f;
    apply_multiplier(out, MultiplierSpec::heat(t));
    return out;
}

double rel_gap(const SpectralField& a, const SpectralField& b) {
    SpectralField d = a;
    axpy_spectral(cplx(-1.0, 0.0), b, d);
    const double na = l2_norm_spectral(a);
    const double nd = l2_norm_spectral(d);
    return na > 0.0 ? nd / na : nd;
}

// One exponential-integrator step in spectral space.
SpectralField step_spectral(const SpectralField& u_hat, const SolverConfig& cfg,
                            int* iterations_out) {
    const double delta = cfg.step;
    if (iterations_out) *iterations_out = 0;

    SpectralField propagated = heat_copy(u_hat, delta);
    if (!cfg.include_nonlinearity) return propagated;

    const SpectralField n_now = projected_nonlinear(u_hat);

    if (cfg.scheme == Scheme::exponential_euler) {
        SpectralField out = propagated;
        SpectralField n_prop = heat_copy(n_now, delta);
        axpy_spectral(cplx(-delta, 0.0), n_prop, out);
        return out;
    }

    // trapezoid: u' = E u - (delta/2)(E n_now + n(u')), fixed point on u'
    SpectralField base = propagated;
    {
        SpectralField n_prop = heat_copy(n_now, delta);
        axpy_spectral(cplx(-0.5 * delta, 0.0), n_prop, base);
    }
    // exponential-Euler predictor
    SpectralField current = propagated;
    {
        SpectralField n_prop = heat_copy(n_now, delta);
        axpy_spectral(cplx(-delta, 0.0), n_prop, current);
    }
    double residual = 0.0;
    for (int it = 1; it <= cfg.max_inner_iterations; ++it) {
        SpectralField next = base;
        const SpectralField n_next = projected_nonlinear(current);
        axpy_spectral(cplx(-0.5 * delta, 0.0), n_next, next);
        residual = rel_gap(next, current);
        current = std::move(next);
        if (iterations_out) *iterations_out = it;
        if (residual <= cfg.inner_tolerance) return current;
    }
    throw ConvergenceError("advance_step: inner iteration did not contract", residual);
}

double tail_enstrophy_fraction(const SpectralField& f) {
    const int n = f.grid.points_per_axis;
    const double l = f.grid.box_length;
    const int band = n / 3;            // retained band after dealiasing
    const int tail_cut = 2 * band / 3; // top third of the retained band
    double total = 0.0, tail = 0.0;
    for (int c = 0; c < 3; ++c) {
        const cplx* p = f.comp[c].data();
        total += deterministic_sum(f.size(), [p, n, l](std::size_t idx) {
            const int i3 = static_cast<int>(idx) % n;
            const int i2 = (static_cast<int>(idx) / n) % n;
            const int i1 = static_cast<int>(idx) / (n * n);
            const double k1 = wavenumber(i1, n, l);
            const double k2 = wavenumber(i2, n, l);
            const double k3 = wavenumber(i3, n, l);
            return (k1 * k1 + k2 * k2 + k3 * k3) * std::norm(p[idx]);
        });
        tail += deterministic_sum(f.size(), [p, n, l, tail_cut](std::size_t idx) {
            const int i3 = static_cast<int>(idx) % n;
            const int i2 = (static_cast<int>(idx) / n) % n;
            const int i1 = static_cast<int>(idx) / (n * n);
            const int mag = std::max({std::abs(signed_mode(i1, n)), std::abs(signed_mode(i2, n)),
                                      std::abs(signed_mode(i3, n))});
            if (mag <= tail_cut) return 0.0;
            const double k1 = wavenumber(i1, n, l);
            const double k2 = wavenumber(i2, n, l);
            const double k3 = wavenumber(i3, n, l);
            return (k1 * k1 + k2 * k2 + k3 * k3) * std::norm(p[idx]);
        });
    }
    return total > 0.0 ? tail / total : 0.0;
}

} // namespace

VectorField advance_step(const VectorField& u_n, double /*t_n*/, const SolverConfig& cfg,
                         int* iterations_out) {
    cfg.validate();
    SpectralField u_hat = forward_transform(u_n);
    return inverse_transform(step_spectral(u_hat, cfg, iterations_out));
}

Trajectory solve_trajectory(const VectorField& u0, const SolverConfig& cfg) {
    cfg.validate();
    const double steps_real = cfg.final_time / cfg.step;
    const long steps = std::lround(steps_real);
    if (std::abs(steps_real - steps) > 1e-9)
        throw DomainError("solve_trajectory: final_time must be a multiple of step");

    SpectralField u_hat = forward_transform(u0);
    if (divergence_defect_ratio(u_hat) > 1e-6)
        throw RejectedInputError("solve_trajectory: initial data is not divergence-free");
    const double mean_scale = u_hat.max_modulus();
    for (int c = 0; c < 3; ++c)
        if (std::abs(u_hat.comp[c][0]) > 1e-12 * std::max(mean_scale, 1e-30))
            throw RejectedInputError("solve_trajectory: initial data is not mean-free");

    Trajectory traj{u0.grid, {}, {}, scheme_name(cfg.scheme), {}, 0.0, false, false};
    traj.initial_mass_fraction = central_halfbox_mass_fraction(u0);
    traj.mass_fraction_warning = traj.initial_mass_fraction < 0.999;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(u0);
    traj.inner_iterations.push_back(0);

    for (long nstep = 1; nstep <= steps; ++nstep) {
        int iters = 0;
        u_hat = step_spectral(u_hat, cfg, &iters);
        traj.times.push_back(nstep * cfg.step);
        traj.states.push_back(inverse_transform(u_hat));
        traj.inner_iterations.push_back(iters);
        if (tail_enstrophy_fraction(u_hat) > 0.01) traj.resolution_warning = true;
    }
    return traj;
}

double duhamel_residual(const Trajectory& traj, double t, int refinement,
                        bool include_nonlinearity) {
    if (refinement < 1) throw DomainError("duhamel_residual: refinement must be >= 1");
    const int it = traj.index_of_time(t);
    if (it < 0) throw DomainError("duhamel_residual: t is not a stored trajectory time");

    SpectralField u_t = forward_transform(traj.states[static_cast<std::size_t>(it)]);
    SpectralField residual = u_t;
    {
        SpectralField u0_hat = forward_transform(traj.states[0]);
        apply_multiplier(u0_hat, MultiplierSpec::heat(t));
        axpy_spectral(cplx(-1.0, 0.0), u0_hat, residual);
    }

    if (it > 0 && include_nonlinearity) {
        const double delta = traj.times[1] - traj.times[0];
        const double h = delta / refinement;
        const long nodes = static_cast<long>(it) * refinement;
        for (long q = 0; q <= nodes; ++q) {
            const double s = q * h;
            const double weight = (q == 0 || q == nodes) ? 0.5 * h : h;
            // piecewise-linear state at s
            long j = q / refinement;
            if (j >= it) j = it - 1;
            const double theta = (s - traj.times[static_cast<std::size_t>(j)]) / delta;
            VectorField u_s = linear_combination(1.0 - theta, traj.states[static_cast<std::size_t>(j)],
                                                 theta, traj.states[static_cast<std::size_t>(j) + 1]);
            SpectralField n_hat = nonlinear_spectral(forward_transform(u_s));
            apply_multiplier(n_hat, MultiplierSpec::leray());
            for (int c = 0; c < 3; ++c) n_hat.comp[c][0] = cplx(0.0, 0.0);
            apply_multiplier(n_hat, MultiplierSpec::heat(t - s));
            axpy_spectral(cplx(weight, 0.0), n_hat, residual);
        }
    }

    const double denom = l2_norm_spectral(u_t);
    const double num = l2_norm_spectral(residual);
    return denom > 0.0 ? num / denom : num;
}

} // namespace nsmild
