#include "nsmild/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>

#include "nsmild/errors.hpp"
#include "nsmild/kato.hpp"
#include "nsmild/kernels.hpp"
#include "nsmild/norms.hpp"
#include "nsmild/operators.hpp"
#include "nsmild/parallel.hpp"
#include "nsmild/random_fields.hpp"
#include "nsmild/regularity.hpp"
#include "nsmild/snapshot.hpp"
#include "nsmild/solver.hpp"
#include "nsmild/transforms.hpp"
#include "nsmild/weak_form.hpp"

namespace nsmild::checks {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

CheckRecord make(const std::string& id, const std::string& anchor, double value, double target,
                 bool pass, double tol, double runtime) {
    return CheckRecord{id, anchor, value, target, pass, tol, runtime};
}

// Taylor-Green trajectories are shared between criteria; keyed by
// (N, step, T, nonlinearity).
const Trajectory& tg_trajectory(int n, double step, double final_time, bool nonlinearity) {
    static std::map<std::string, std::unique_ptr<Trajectory>> cache;
    static std::mutex mtx;
    char key[96];
    std::snprintf(key, sizeof(key), "%d|%.12g|%.12g|%d", n, step, final_time, nonlinearity ? 1 : 0);
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    GridSpec grid(3, n, kTwoPi);
    SolverConfig cfg;
    cfg.step = step;
    cfg.final_time = final_time;
    cfg.include_nonlinearity = nonlinearity;
    auto traj = std::make_unique<Trajectory>(solve_trajectory(taylor_green(grid), cfg));
    auto [pos, ok] = cache.emplace(key, std::move(traj));
    return *pos->second;
}

double rel_gap_fields(const VectorField& a, const VectorField& b) {
    const double na = l2_norm(a);
    const double nd = l2_norm(linear_combination(1.0, a, -1.0, b));
    return na > 0.0 ? nd / na : nd;
}

std::vector<TestFunction> seeded_test_functions(const GridSpec& grid, double T, int count) {
    std::vector<TestFunction> phis;
    phis.reserve(count);
    const TestClass classes[3] = {TestClass::product_class, TestClass::t1, TestClass::t_chi};
    for (int s = 1; s <= count; ++s)
        phis.push_back(generate_test_function(s, classes[s % 3], grid, T, 0.01));
    return phis;
}

} // namespace

// --- criterion 1 -----------------------------------------------------------

VerificationReport criterion_operator_algebra() {
    Timer timer;
    const GridSpec grid(3, 32, kTwoPi);
    double worst = 0.0;
    for (int seed = 1; seed <= 100; ++seed) {
        const VectorField f = random_smooth_field(grid, seed);
        const VectorField g = random_smooth_field(grid, seed + 1000);
        const SpectralField F = forward_transform(f);
        const SpectralField G = forward_transform(g);

        // transform round trip
        const VectorField f2 = inverse_transform(F);
        worst = std::max(worst, rel_gap_fields(f, f2));

        // Parseval
        const double l2p = l2_norm(f);
        worst = std::max(worst, std::abs(l2p - l2_norm_spectral(F)) / l2p);

        // projector algebra
        SpectralField PF = F;
        apply_multiplier(PF, MultiplierSpec::leray());
        SpectralField PPF = PF;
        apply_multiplier(PPF, MultiplierSpec::leray());
        const double npf = l2_norm_spectral(PF);
        {
            SpectralField diff = PPF;
            axpy_spectral(cplx(-1.0, 0.0), PF, diff);
            worst = std::max(worst, l2_norm_spectral(diff) / npf);
        }
        SpectralField PG = G;
        apply_multiplier(PG, MultiplierSpec::leray());
        const double sym = std::abs(inner_product_spectral(PF, G) - inner_product_spectral(F, PG));
        worst = std::max(worst, sym / (l2_norm_spectral(F) * l2_norm_spectral(G)));
        worst = std::max(worst, std::max(0.0, npf / l2_norm_spectral(F) - 1.0));

        // gradient annihilation: P (grad p) = 0
        ScalarSpectral p(grid);
        p.coeff = F.comp[0];
        SpectralField gradp = spectral_gradient(p);
        const double ngrad = l2_norm_spectral(gradp);
        apply_multiplier(gradp, MultiplierSpec::leray());
        worst = std::max(worst, l2_norm_spectral(gradp) / ngrad);

        // semigroup law
        SpectralField h1 = F;
        apply_multiplier(h1, MultiplierSpec::heat(0.1));
        apply_multiplier(h1, MultiplierSpec::heat(0.2));
        SpectralField h2 = F;
        apply_multiplier(h2, MultiplierSpec::heat(0.3));
        axpy_spectral(cplx(-1.0, 0.0), h2, h1);
        worst = std::max(worst, l2_norm_spectral(h1) / l2_norm_spectral(h2));
    }
    VerificationReport rep;
    const double runtime = timer.seconds();
    rep.add(make("criterion-01", "projector and semigroup operator algebra", worst, 1e-10,
                 worst <= 1e-10 && runtime < 30.0, 1e-10, runtime));
    return rep;
}

// --- criterion 2 -----------------------------------------------------------

VerificationReport criterion_heat_reduction() {
    Timer timer;
    const GridSpec grid(3, 32, kTwoPi);
    VectorField u0 = single_mode_field(grid, {1, 2, 0}, {2.0, -1.0, 0.0});
    scale(u0, 1.0 / l2_norm(u0));
    SolverConfig cfg;
    cfg.step = 1.0 / 256.0;
    cfg.final_time = 1.0;
    cfg.include_nonlinearity = false;
    const Trajectory traj = solve_trajectory(u0, cfg);

    const double kappa = 5.0;  // |k|^2 of mode (1,2,0)
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); i += 16) {
        VectorField expect = u0;
        scale(expect, std::exp(-kappa * traj.times[i]));
        worst = std::max(worst, rel_gap_fields(expect, traj.states[i]));
    }
    {
        VectorField expect = u0;
        scale(expect, std::exp(-kappa * traj.times.back()));
        worst = std::max(worst, rel_gap_fields(expect, traj.states.back()));
    }
    VerificationReport rep;
    const double runtime = timer.seconds();
    rep.add(make("criterion-02", "solver reduces to the heat semigroup without the nonlinearity",
                 worst, 1e-10, worst <= 1e-10 && runtime < 10.0, 1e-10, runtime));
    return rep;
}

// --- criterion 3 -----------------------------------------------------------

VerificationReport criterion_duhamel() {
    Timer timer;
    const double delta = 1.0 / 256.0;
    const Trajectory& base = tg_trajectory(32, delta, 0.5, true);
    const Trajectory& half = tg_trajectory(32, delta / 2.0, 0.5, true);
    const int refinement = 2;  // past the scheme-identity point, near the plateau

    VerificationReport rep;
    bool pass = true;
    double worst_rel = 0.0;   // residual / (10 delta^2)
    double worst_ratio = 0.0; // residual(delta/2) / residual(delta)
    for (double t : {0.125, 0.25, 0.5}) {
        const double r_base = duhamel_residual(base, t, refinement);
        const double r_half = duhamel_residual(half, t, refinement);
        rep.series["duhamel_residual"].push_back({t, r_base});
        rep.series["duhamel_residual_half_step"].push_back({t, r_half});
        const double bound = 10.0 * delta * delta;
        const double bound_half = 10.0 * 0.25 * delta * delta;
        if (r_base > bound || r_half > bound_half) pass = false;
        worst_rel = std::max(worst_rel, r_base / bound);
        const double ratio = r_base > 0.0 ? r_half / r_base : 0.0;
        worst_ratio = std::max(worst_ratio, ratio);
        // at least halves when the step halves; the scheme is second order so
        // the ratio sits near 1/4 (see ledger), well below the 0.6 ceiling
        if (ratio > 0.6) pass = false;
    }
    const double runtime = timer.seconds();
    rep.add(make("criterion-03", "mild-equation residual of the computed trajectory",
                 worst_rel, 1.0, pass && runtime < 300.0, 1.0, runtime));
    rep.add(make("criterion-03.step-halving", "residual at least halves when the step halves",
                 worst_ratio, 0.6, worst_ratio <= 0.6, 0.6, runtime));
    return rep;
}

// --- criterion 4 -----------------------------------------------------------

namespace {

double weak_c_constant(const Trajectory& traj, int n, double delta, double T, int seeds,
                       double* worst_gap) {
    const GridSpec grid(3, n, kTwoPi);
    const std::vector<TestFunction> phis = seeded_test_functions(grid, T, seeds);
    WeakFormEvaluator eval(traj, phis);
    const double model = delta * delta + (grid.box_length / n) * (grid.box_length / n);
    double c = 0.0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const WeakResidualReport r = eval.residual(i, T);
        if (r.scale > 0.0) c = std::max(c, r.gap / (model * r.scale));
        if (worst_gap) *worst_gap = std::max(*worst_gap, r.scale > 0 ? r.gap / r.scale : 0.0);
    }
    return c;
}

} // namespace

VerificationReport criterion_weak_consistency() {
    Timer timer;
    const double delta = 1.0 / 256.0;
    const double T = 0.5;
    const int seeds = 20;

    double gap_base = 0.0, gap_dt = 0.0, gap_nx = 0.0;
    const double c_base = weak_c_constant(tg_trajectory(32, delta, T, true), 32, delta, T, seeds, &gap_base);
    const double c_dt = weak_c_constant(tg_trajectory(32, delta / 2, T, true), 32, delta / 2, T, seeds, &gap_dt);
    const double c_nx = weak_c_constant(tg_trajectory(40, delta, T, true), 40, delta, T, seeds, &gap_nx);

    // C may collapse under refinement (spectral spatial accuracy outpaces the
    // (L/N)^2 model); stability is that it never grows by more than x2.
    const bool stable = c_dt <= 2.0 * c_base && c_nx <= 2.0 * c_base;
    const bool finite = std::isfinite(c_base) && c_base > 0.0;

    VerificationReport rep;
    rep.series["weak_gap_over_scale"] = {{32.0, gap_base}, {64.0, gap_dt}, {40.0, gap_nx}};
    const double runtime = timer.seconds();
    rep.add(make("criterion-04", "weak-form residual bounded by C (dt^2 + dx^2) with stable C",
                 c_base, 2.0 * c_base, stable && finite && runtime < 600.0, 2.0, runtime));
    rep.add(make("criterion-04.step-refined", "C under step refinement", c_dt, 2.0 * c_base,
                 c_dt <= 2.0 * c_base, 2.0, runtime));
    rep.add(make("criterion-04.grid-refined", "C under grid refinement", c_nx, 2.0 * c_base,
                 c_nx <= 2.0 * c_base, 2.0, runtime));
    return rep;
}

// --- criterion 5 -----------------------------------------------------------

VerificationReport criterion_kato() {
    Timer timer;
    const GridSpec grid(3, 48, 16.0);
    const std::array<double, 3> center{8.0, 8.0, 8.0};
    const VectorField f_free = localized_divergence_free_field(grid, 7, center, 1.5);
    const VectorField f_general = gaussian_envelope_field(grid, 8, center, 1.5);

    VerificationReport rep;
    bool pass = true;

    // divergence identity for both kinds of input
    const CutoffProfile profile(1.0);
    const double res_free = divergence_identity_residual(f_free, profile);
    const double res_general = divergence_identity_residual(f_general, profile);
    if (res_free > 1e-6 || res_general > 1e-6) pass = false;

    // exact compact support
    const VectorField f_r = kato_approximate(f_free, profile);
    const double support2 = std::exp(2.0 * profile.R) - 1.0;
    const int n = grid.points_per_axis;
    const double h = grid.spacing(), half = 8.0;
    double outside = 0.0;
    for (std::size_t idx = 0; idx < f_r.size(); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const double x1 = i1 * h - half, x2 = i2 * h - half, x3 = i3 * h - half;
        if (x1 * x1 + x2 * x2 + x3 * x3 >= support2)
            for (int c = 0; c < 3; ++c) outside = std::max(outside, std::abs(f_r.comp[c][idx]));
    }
    if (outside != 0.0) pass = false;

    // ||f_R - f||_2 decreasing over R in {R0, 2 R0, 4 R0}
    double prev = -1.0;
    bool decreasing = true;
    for (double R : {0.5, 1.0, 2.0}) {
        const VectorField approx = kato_approximate(f_free, CutoffProfile(R));
        const double err = l2_norm(linear_combination(1.0, approx, -1.0, f_free));
        rep.series["kato_error_vs_R"].push_back({R, err});
        if (prev >= 0.0 && err >= prev) decreasing = false;
        prev = err;
    }
    if (!decreasing) pass = false;

    // Q_k norm bounds on 20 localized samples (smaller grid suffices)
    const GridSpec qgrid(3, 24, 16.0);
    double worst_q = 0.0;
    for (int seed = 1; seed <= 20; ++seed) {
        const VectorField f = localized_divergence_free_field(qgrid, seed, center, 1.5);
        for (int k : {0, 1}) {
            const auto q = ray_moment_grid(k, f);
            VectorField qf(qgrid);
            for (std::size_t i = 0; i < q.size(); ++i)
                for (int c = 0; c < 3; ++c) qf.comp[c][i] = q[i][c];
            for (double p : {3.0, -1.0}) {  // p = m and p = infinity
                const double pp = p > 0 ? p : lp_infinity;
                const double dual = p > 0 ? p / (p - 1.0) : 1.0;
                const double bound = 1.0 / (-k + 3.0 / dual);
                const double ratio = lp_norm(qf, pp) / (bound * lp_norm(f, pp));
                worst_q = std::max(worst_q, ratio);
            }
        }
    }
    if (worst_q > 1.0) pass = false;

    const double runtime = timer.seconds();
    rep.add(make("criterion-05", "compact-support approximation: divergence identity and bounds",
                 std::max(res_free, res_general), 1e-6, pass && runtime < 300.0, 1e-6, runtime));
    rep.add(make("criterion-05.support", "hard zeros outside the support radius", outside, 0.0,
                 outside == 0.0, 0.0, runtime));
    rep.add(make("criterion-05.q-bound", "ray-moment norm bound (-k + m/p')^{-1}", worst_q, 1.0,
                 worst_q <= 1.0, 1.0, runtime));
    return rep;
}

// --- criterion 6 -----------------------------------------------------------

VerificationReport criterion_g_decay() {
    Timer timer;
    std::vector<double> wgrid;
    for (double w = 0.0; w <= 5.0; w += 0.25) wgrid.push_back(w);
    for (double w : {5.5, 6.0, 7.0, 8.0, 10.0, 12.0, 16.0, 20.0, 25.0, 30.0, 40.0, 50.0})
        wgrid.push_back(w);

    VerificationReport rep;
    bool pass = true;
    double zero_defect = 0.0;
    double worst_argmax = 0.0;
    for (int m : {3, 4, 5})
        for (int n : {0, 1})
            for (double r : {0.0, 0.5, 0.9})
                for (double t : {0.0, 1.0}) {
                    double sup = 0.0, arg = 0.0;
                    for (double w : wgrid) {
                        const KernelQuery q{m, r, t, n, w};
                        const double v = eval_g(q, 1e-7).value;
                        if (!std::isfinite(v)) pass = false;
                        const double weighted = std::pow(1.0 + w, m + n - 1) * std::abs(v);
                        if (weighted > sup) {
                            sup = weighted;
                            arg = w;
                        }
                        if (w == 0.0 && n == 0) zero_defect = std::max(zero_defect, std::abs(v));
                    }
                    if (arg > 5.0) pass = false;
                    worst_argmax = std::max(worst_argmax, arg);
                    if (m == 3 && n == 0 && t == 1.0) {
                        char name[64];
                        std::snprintf(name, sizeof(name), "g_decay_weighted_r%.1f", r);
                        for (double w : wgrid)
                            rep.series[name].push_back(
                                {w, std::pow(1.0 + w, m + n - 1) *
                                        std::abs(eval_g(KernelQuery{m, r, t, n, w}, 1e-7).value)});
                    }
                }
    if (zero_defect > 1e-8) pass = false;

    const double runtime = timer.seconds();
    rep.add(make("criterion-06", "kernel decay (1+w)^{m+n-1} sup attained at small w",
                 worst_argmax, 5.0, pass && runtime < 300.0, 5.0, runtime));
    rep.add(make("criterion-06.origin", "kernel vanishes at w = 0", zero_defect, 0.0,
                 zero_defect <= 1e-8, 1e-8, runtime));
    return rep;
}

// --- criterion 7 -----------------------------------------------------------

VerificationReport criterion_h_gaussian() {
    Timer timer;
    VerificationReport rep;
    bool pass = true;
    double worst = 0.0;
    for (int m : {3, 4, 5}) {
        double lo = 1e300, hi = -1e300;
        for (double w = 0.0; w <= 6.0 + 1e-12; w += 0.25) {
            const KernelQuery q{m, 0.0, 1.0, 0, w};
            const double ratio = eval_h(q, 1e-11).value / std::exp(-w * w / 4.0);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            if (m == 3) rep.series["h_gaussian_ratio_m3"].push_back({w, ratio});
        }
        const double spread = (hi - lo) / (0.5 * (hi + lo));
        worst = std::max(worst, spread);
        if (spread > 1e-6) pass = false;
    }
    const double runtime = timer.seconds();
    rep.add(make("criterion-07", "companion kernel is Gaussian at r = 0", worst, 1e-6,
                 pass && runtime < 60.0, 1e-6, runtime));
    return rep;
}

// --- criterion 8 -----------------------------------------------------------

VerificationReport criterion_bessel() {
    Timer timer;
    VerificationReport rep;
    bool pass = true;
    double worst_mass = 0.0, worst_stability = 0.0;
    const double w = 0.5;
    for (int m : {3, 4, 5}) {
        const double mass = bessel_kernel_mass(m, w, 1e-8).value;
        worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
        if (std::abs(mass - 1.0) > 1e-6) pass = false;

        // fitted C on the two log-halves of [0.1, 10]
        double c_lo = 0.0, c_hi = 0.0;
        for (int i = 0; i <= 24; ++i) {
            const double rho = 0.1 * std::pow(100.0, i / 24.0);
            const double k = eval_bessel_kernel(m, w, rho, 1e-10).value;
            const double ratio = k * std::exp(rho / 2.0) * std::pow(rho, m - w);
            if (rho <= 1.0)
                c_lo = std::max(c_lo, ratio);
            else
                c_hi = std::max(c_hi, ratio);
            if (m == 3) rep.series["bessel_bound_ratio_m3"].push_back({rho, ratio});
        }
        const double stability = std::max(c_lo, c_hi) / std::min(c_lo, c_hi);
        worst_stability = std::max(worst_stability, stability);
        if (stability > 2.0) pass = false;
    }
    const double runtime = timer.seconds();
    rep.add(make("criterion-08", "Bessel kernel: unit mass and bound-constant stability",
                 worst_mass, 1e-6, pass && runtime < 60.0, 1e-6, runtime));
    rep.add(make("criterion-08.bound-stability", "fitted C stable across the radius range",
                 worst_stability, 2.0, worst_stability <= 2.0, 2.0, runtime));
    return rep;
}

// --- criterion 9 -----------------------------------------------------------

namespace {

// Streamed Riemann sum of int |K_1(x+h) - K_1(x)| dx at m = 3 with the kink
// plane x1 = -lambda/2 aligned to the grid.
double heat_shift_grid_oracle(double lambda) {
    const double extent = 13.5;
    const int n = 512;
    const double h = 2.0 * extent / n;  // 27/512, kink at -0.5 lands on-grid
    const double norm = std::pow(2.0 * kTwoPi, -1.5);  // (4 pi)^{-3/2}
    double total = 0.0;
    std::vector<double> partial(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int i1 = 0; i1 < n; ++i1) {
        const double x1 = -14.0 + i1 * h;  // kink plane x1 = -1/2 lands on node 256
        double acc = 0.0;
        for (int i2 = 0; i2 < n; ++i2) {
            const double x2 = -extent + i2 * h;
            const double r2 = x2 * x2;
            for (int i3 = 0; i3 < n; ++i3) {
                const double x3 = -extent + i3 * h;
                const double rho2 = r2 + x3 * x3;
                const double a = std::exp(-((x1 + lambda) * (x1 + lambda) + rho2) / 4.0);
                const double b = std::exp(-(x1 * x1 + rho2) / 4.0);
                acc += std::abs(a - b);
            }
        }
        partial[i1] = acc;
    }
    for (int i = 0; i < n; ++i) total += partial[i];
    return total * h * h * h * norm;
}

} // namespace

VerificationReport criterion_heat_shift() {
    Timer timer;
    VerificationReport rep;
    bool pass = true;

    // extremes
    const double at_zero = heat_shift_l1(1.0, 0.0, 1e-10).value;
    const double near_zero = heat_shift_l1(1.0, 1e-9, 1e-10).value;
    const double saturated = heat_shift_l1(0.01, 100.0, 1e-10).value;
    if (at_zero != 0.0 || near_zero > 1e-8 || std::abs(saturated - 2.0) > 1e-8) pass = false;

    // monotone ladder, bounded by min(2, c w)
    double c_fit = 0.0;
    std::vector<std::pair<double, double>> ladder;
    for (int j = -8; j <= 8; ++j) {
        const double w = std::pow(2.0, j);
        const double lambda = 2.0 * w;  // t = 1
        const double v = heat_shift_l1(1.0, lambda, 1e-10).value;
        ladder.push_back({w, v});
        c_fit = std::max(c_fit, v / w);
    }
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i)
        if (ladder[i + 1].second < ladder[i].second) pass = false;
    for (const auto& [w, v] : ladder) {
        rep.series["heat_shift_l1"].push_back({w, v});
        if (v > std::min(2.0, c_fit * w) + 1e-12) pass = false;
    }

    // cross-check against the 3D grid evaluation at t = 1, lambda = 1
    const double reduced = heat_shift_l1(1.0, 1.0, 1e-10).value;
    const double grid3d = heat_shift_grid_oracle(1.0);
    const double xcheck = std::abs(reduced - grid3d) / reduced;
    if (xcheck > 1e-4) pass = false;

    const double runtime = timer.seconds();
    rep.add(make("criterion-09", "heat-kernel shift distance: limits and grid cross-check",
                 xcheck, 1e-4, pass && runtime < 60.0, 1e-4, runtime));
    return rep;
}

// --- criterion 10 ----------------------------------------------------------

VerificationReport criterion_translation_bound() {
    Timer timer;
    VerificationReport rep;
    bool pass = true;

    std::vector<double> lambdas;
    for (int j = 1; j <= 10; ++j) lambdas.push_back(std::pow(2.0, -j));

    auto fit_slope = [&](double r) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (double l : lambdas) {
            const double v = translation_bound_integral(r, l, 1e-10).value;
            if (r == 0.5) rep.series["translation_bound_r05"].push_back({l, v});
            const double x = std::log(l), y = std::log(v);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(lambdas.size());
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };

    double worst_dev = 0.0;
    for (double r : {0.3, 0.5, 0.8}) {
        const double dev = std::abs(fit_slope(r) - r);
        worst_dev = std::max(worst_dev, dev);
        if (dev > 0.05) pass = false;
    }
    for (double r : {1.5, 2.0}) {
        const double dev = std::abs(fit_slope(r) - 1.0);
        worst_dev = std::max(worst_dev, dev);
        if (dev > 0.05) pass = false;
    }
    // r = 1: value / (lambda log(1/lambda)) bounded across the ladder
    double qlo = 1e300, qhi = 0.0;
    for (double l : lambdas) {
        const double q = translation_bound_integral(1.0, l, 1e-10).value / (l * std::log(1.0 / l));
        qlo = std::min(qlo, q);
        qhi = std::max(qhi, q);
    }
    if (qhi / qlo > 2.0) pass = false;

    // r = 2 small-lambda plateau of value/lambda within +-5%
    double plo = 1e300, phi = 0.0;
    for (int j = 6; j <= 10; ++j) {
        const double l = std::pow(2.0, -j);
        const double q = translation_bound_integral(2.0, l, 1e-10).value / l;
        plo = std::min(plo, q);
        phi = std::max(phi, q);
    }
    if ((phi - plo) / (0.5 * (phi + plo)) > 0.1) pass = false;

    const double runtime = timer.seconds();
    rep.add(make("criterion-10", "translation-operator bound regimes in |h|", worst_dev, 0.05,
                 pass && runtime < 60.0, 0.05, runtime));
    rep.add(make("criterion-10.log-regime", "r = 1 log regime bounded", qhi / qlo, 2.0,
                 qhi / qlo <= 2.0, 2.0, runtime));
    return rep;
}

// --- criterion 11 ----------------------------------------------------------

VerificationReport criterion_smoothing() {
    Timer timer;
    const GridSpec grid(3, 16, kTwoPi);
    VerificationReport rep;
    bool pass = true;
    double worst = 0.0;  // ratio / bound
    for (int seed = 1; seed <= 20; ++seed) {
        const VectorField f = random_smooth_field(grid, 300 + seed);
        for (double eps : {0.25, 0.5, 1.0}) {
            const std::vector<double> ratios =
                smoothing_difference_check(f, eps, {1e-1, 1e-2, 1e-3});
            const double hs[3] = {1e-1, 1e-2, 1e-3};
            for (int i = 0; i < 3; ++i) {
                const double bound = 2.0 * std::pow(hs[i], eps) / std::tgamma(1.0 + eps) + 1e-8;
                worst = std::max(worst, ratios[i] / bound);
                if (ratios[i] > bound) pass = false;
            }
        }
    }
    const double runtime = timer.seconds();
    rep.add(make("criterion-11", "smoothing-difference bound with the explicit constant",
                 worst, 1.0, pass && runtime < 60.0, 1.0, runtime));
    return rep;
}

// --- criterion 12 ----------------------------------------------------------

VerificationReport criterion_regularity() {
    Timer timer;
    const double T = 0.5;
    const double delta = T / 512.0;
    const Trajectory& traj = tg_trajectory(32, delta, T, true);
    VerificationReport rep;
    bool pass = true;

    // uniform boundedness of ||v(t)||_{L1_r} over the trajectory
    std::map<double, double> max_norm;
    for (double r : {0.0, 0.3, 0.6, 0.9}) max_norm[r] = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); i += 16) {
        const VectorField v = compute_fluctuation(traj, traj.times[i]);
        for (double r : {0.0, 0.3, 0.6, 0.9}) {
            const double nv = l1r_norm(v, r);
            if (!std::isfinite(nv)) pass = false;
            max_norm[r] = std::max(max_norm[r], nv);
            if (r == 0.0) rep.series["fluctuation_l1_norm"].push_back({traj.times[i], nv});
        }
    }
    const double growth = max_norm[0.9] / std::max(max_norm[0.0], 1e-300);
    if (growth >= 100.0) pass = false;

    // temporal Holder ladder at t = 0.25
    std::vector<double> offsets;
    for (int j = 4; j <= 9; ++j) offsets.push_back(T / std::pow(2.0, j));
    double prev_slope = 1e300;
    double slope_r0 = 0.0;
    bool nonincreasing = true;
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
        const HolderFit fit = temporal_holder_fit(traj, 0.25, r, offsets);
        if (fit.degenerate) pass = false;
        if (r == 0.0) {
            slope_r0 = fit.slope;
            for (std::size_t i = 0; i < fit.offsets.size(); ++i)
                rep.series["temporal_holder_r0"].push_back({fit.offsets[i], fit.norms[i]});
        }
        if (fit.slope > prev_slope + 0.02) nonincreasing = false;  // fit jitter allowance
        prev_slope = fit.slope;
    }
    if (slope_r0 < 0.45 || !nonincreasing) pass = false;

    // spatial Holder at (p, r) = (1, 0.9)
    const VectorField v = compute_fluctuation(traj, 0.25);
    std::vector<std::array<double, 3>> shifts;
    for (int j = 2; j <= 7; ++j) shifts.push_back({std::pow(2.0, -j), 0.0, 0.0});
    const SpatialHolderResult sh = spatial_holder_fit(v, 1.0, 0.9, shifts);
    double rlo = 1e300, rhi = 0.0;
    for (double ratio : sh.ratios) {
        rlo = std::min(rlo, ratio);
        rhi = std::max(rhi, ratio);
    }
    const double ratio_spread = rhi / std::max(rlo, 1e-300);
    if (!(std::isfinite(sh.fitted_c) && ratio_spread <= 2.0)) pass = false;
    for (std::size_t i = 0; i < sh.fit.offsets.size(); ++i)
        rep.series["spatial_holder"].push_back({sh.fit.offsets[i], sh.fit.norms[i]});

    // interpolation inequality on 100 random fields
    const GridSpec igrid(3, 16, kTwoPi);
    double worst_interp = 0.0;
    Rng rng(99);
    for (int seed = 1; seed <= 100; ++seed) {
        const VectorField f = random_smooth_field(igrid, 500 + seed);
        const double p = rng.uniform(1.05, 1.95);
        const InterpolationRecord rec = interpolation_check(f, p);
        if (rec.degenerate) pass = false;
        worst_interp = std::max(worst_interp, rec.ratio);
        if (rec.ratio > 1.0 + 1e-10) pass = false;
    }

    const double runtime = timer.seconds();
    rep.add(make("criterion-12", "fluctuation regularity: bounded norms and Holder slopes",
                 slope_r0, 0.45, pass && runtime < 600.0, 0.05, runtime));
    rep.add(make("criterion-12.r-growth", "norm growth from r=0 to r=0.9", growth, 100.0,
                 growth < 100.0, 100.0, runtime));
    rep.add(make("criterion-12.spatial", "spatial difference-quotient ratio stability",
                 ratio_spread, 2.0, ratio_spread <= 2.0, 2.0, runtime));
    rep.add(make("criterion-12.interpolation", "Lp log-convexity ratio", worst_interp,
                 1.0 + 1e-10, worst_interp <= 1.0 + 1e-10, 1e-10, runtime));
    return rep;
}

// --- experiment pipelines ---------------------------------------------------

namespace {

VectorField initial_data(const ExperimentConfig& cfg, const GridSpec& grid) {
    if (cfg.initial_data == "taylor_green") return taylor_green(grid);
    if (cfg.initial_data == "single_mode")
        return single_mode_field(grid, {1, 2, 0}, {2.0, -1.0, 0.0});
    if (cfg.initial_data == "random")
        return random_divergence_free_field(grid, cfg.seed);
    throw DomainError("config: unknown initial_data '" + cfg.initial_data + "'");
}

VerificationReport run_simulate(const ExperimentConfig& cfg) {
    Timer timer;
    const GridSpec grid(cfg.grid_m, cfg.grid_n, cfg.grid_l);
    VectorField u0 = initial_data(cfg, grid);
    {
        const double norm = l2_norm(u0);
        if (norm > 0.0) scale(u0, 1.0 / norm);
    }
    SolverConfig scfg;
    scfg.step = cfg.step;
    scfg.final_time = cfg.final_time;
    scfg.inner_tolerance = cfg.inner_tolerance;
    scfg.max_inner_iterations = cfg.max_inner_iterations;
    scfg.scheme = cfg.scheme == "exponential_euler" ? Scheme::exponential_euler
                                                    : Scheme::exponential_trapezoid;
    scfg.include_nonlinearity = cfg.nonlinearity;
    const Trajectory traj = solve_trajectory(u0, scfg);

    VerificationReport rep;
    const double e0 = l2_norm(traj.states.front());
    double emax = 0.0, div_defect = 0.0;
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const double e = l2_norm(traj.states[i]);
        emax = std::max(emax, e);
        rep.series["energy"].push_back({traj.times[i], e * e * 0.5});
    }
    for (std::size_t i = 0; i < traj.states.size(); i += std::max<std::size_t>(1, traj.states.size() / 8))
        div_defect = std::max(div_defect,
                              divergence_defect_ratio(forward_transform(traj.states[i])));

    rep.add(make("simulate.dissipativity", "resolved-scale energy does not grow",
                 emax / e0, 1.0 + 1e-6, emax <= e0 * (1.0 + 1e-6), 1e-6, timer.seconds()));
    rep.add(make("simulate.divergence", "states stay divergence-free", div_defect, 1e-10,
                 div_defect <= 1e-10, 1e-10, timer.seconds()));
    rep.add(make("simulate.mass-fraction", "central half-box mass diagnostic",
                 traj.initial_mass_fraction, 0.999, true, 0.0, timer.seconds()));
    if (!cfg.nonlinearity) {
        // heat-flow reduction against the exact semigroup
        double worst = 0.0;
        for (std::size_t i = 0; i < traj.states.size(); i += 16)
            worst = std::max(worst, rel_gap_fields(heat_semigroup(traj.times[i], u0),
                                                   traj.states[i]));
        rep.add(make("simulate.heat-reduction", "pure heat flow matches the semigroup", worst,
                     1e-10, worst <= 1e-10, 1e-10, timer.seconds()));
    }
    save_snapshot(cfg.out_dir + "/final_state.nsmild", traj.states.back());
    return rep;
}

VerificationReport run_verify_weak(const ExperimentConfig& cfg) {
    Timer timer;
    VerificationReport rep;
    const GridSpec grid(cfg.grid_m, cfg.grid_n, cfg.grid_l);
    VectorField u0 = initial_data(cfg, grid);
    {
        const double norm = l2_norm(u0);
        if (norm > 0.0) scale(u0, 1.0 / norm);
    }
    SolverConfig scfg;
    scfg.step = cfg.step;
    scfg.final_time = cfg.final_time;
    scfg.include_nonlinearity = cfg.nonlinearity;
    const Trajectory traj = solve_trajectory(u0, scfg);

    double worst_res = 0.0;
    for (double t : cfg.sweep_t) {
        if (traj.index_of_time(t) < 0) continue;
        const double res = duhamel_residual(traj, t, 2, cfg.nonlinearity);
        rep.series["duhamel_residual"].push_back({t, res});
        worst_res = std::max(worst_res, res);
    }
    const double bound = 10.0 * cfg.step * cfg.step;
    rep.add(make("verify-weak.duhamel", "mild-equation residual", worst_res, bound,
                 worst_res <= bound, bound, timer.seconds()));

    const std::vector<TestFunction> phis = seeded_test_functions(grid, cfg.final_time, cfg.seeds);
    WeakFormEvaluator eval(traj, phis, cfg.nonlinearity);
    double worst_gap = 0.0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const WeakResidualReport r = eval.residual(i, cfg.final_time);
        if (r.scale > 0.0) worst_gap = std::max(worst_gap, r.gap / r.scale);
        rep.series["weak_gap"].push_back({static_cast<double>(i + 1),
                                          r.scale > 0 ? r.gap / r.scale : 0.0});
    }
    const double model =
        cfg.step * cfg.step + std::pow(cfg.grid_l / cfg.grid_n, 2.0);
    rep.add(make("verify-weak.gap", "weak-form gap over scale", worst_gap, model,
                 worst_gap <= model, model, timer.seconds()));
    return rep;
}

VerificationReport append(VerificationReport into, VerificationReport from) {
    for (auto& r : from.records) into.records.push_back(std::move(r));
    for (auto& [k, v] : from.series) into.series[k] = std::move(v);
    return into;
}

// Reduced but complete pipeline used by the determinism criterion.
VerificationReport run_quick_suite(std::uint64_t seed) {
    VerificationReport rep;
    Timer timer;
    const GridSpec grid(3, 16, kTwoPi);
    VectorField u0 = taylor_green(grid);
    SolverConfig scfg;
    scfg.step = 1.0 / 64.0;
    scfg.final_time = 0.125;
    const Trajectory traj = solve_trajectory(u0, scfg);
    rep.add(make("quick.solve", "trajectory energy", l2_norm(traj.states.back()), 1.0,
                 l2_norm(traj.states.back()) <= 1.0, 1e-6, timer.seconds()));
    rep.add(make("quick.duhamel", "mild residual", duhamel_residual(traj, 0.125, 2), 1.0,
                 true, 0.0, timer.seconds()));
    const std::vector<TestFunction> phis = seeded_test_functions(grid, 0.125, 3);
    WeakFormEvaluator eval(traj, phis);
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const WeakResidualReport r = eval.residual(i, 0.125);
        rep.add(make("quick.weak-" + std::to_string(i), "weak gap", r.gap, r.scale, true, 0.0,
                     timer.seconds()));
    }
    const GridSpec kgrid(3, 16, 16.0);
    const VectorField f = localized_divergence_free_field(kgrid, seed, {8.0, 8.0, 8.0}, 1.5);
    rep.add(make("quick.kato", "divergence identity",
                 divergence_identity_residual(f, CutoffProfile(0.5)), 1e-4, true, 0.0,
                 timer.seconds()));
    rep.add(make("quick.kernel-g", "kernel value",
                 eval_g(KernelQuery{3, 0.5, 1.0, 0, 2.0}, 1e-8).value, 0.0, true, 0.0,
                 timer.seconds()));
    rep.add(make("quick.kernel-shift", "heat shift value",
                 heat_shift_l1(1.0, 1.0, 1e-10).value, 2.0, true, 0.0, timer.seconds()));
    const VectorField rf = random_smooth_field(grid, seed + 1);
    rep.add(make("quick.smoothing", "smoothing ratio",
                 smoothing_difference_check(rf, 0.5, {1e-2})[0], 1.0, true, 0.0,
                 timer.seconds()));
    rep.add(make("quick.interpolation", "log-convexity ratio",
                 interpolation_check(rf, 1.5).ratio, 1.0 + 1e-10, true, 0.0, timer.seconds()));
    return rep;
}

} // namespace

VerificationReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.kind == "simulate") return run_simulate(cfg);
    if (cfg.kind == "verify-weak") return run_verify_weak(cfg);
    if (cfg.kind == "kato") return criterion_kato();
    if (cfg.kind == "kernels") {
        VerificationReport rep = criterion_g_decay();
        rep = append(std::move(rep), criterion_h_gaussian());
        rep = append(std::move(rep), criterion_bessel());
        rep = append(std::move(rep), criterion_heat_shift());
        rep = append(std::move(rep), criterion_translation_bound());
        return rep;
    }
    if (cfg.kind == "holder") {
        VerificationReport rep = criterion_smoothing();
        rep = append(std::move(rep), criterion_regularity());
        return rep;
    }
    // kind == "all"
    if (cfg.quick) {
        VerificationReport rep = run_quick_suite(cfg.seed);
        const std::string d1 = rep.canonical_digest();
        const std::string d2 = run_quick_suite(cfg.seed).canonical_digest();
        rep.add(make("determinism", "repeated run produces identical results",
                     d1 == d2 ? 1.0 : 0.0, 1.0, d1 == d2, 0.0, 0.0));
        return rep;
    }
    Timer timer;
    VerificationReport rep = criterion_operator_algebra();
    rep = append(std::move(rep), criterion_heat_reduction());
    rep = append(std::move(rep), criterion_duhamel());
    rep = append(std::move(rep), criterion_weak_consistency());
    rep = append(std::move(rep), criterion_kato());
    rep = append(std::move(rep), criterion_g_decay());
    rep = append(std::move(rep), criterion_h_gaussian());
    rep = append(std::move(rep), criterion_bessel());
    rep = append(std::move(rep), criterion_heat_shift());
    rep = append(std::move(rep), criterion_translation_bound());
    rep = append(std::move(rep), criterion_smoothing());
    rep = append(std::move(rep), criterion_regularity());
    {
        Timer t13;
        const std::string d1 = run_quick_suite(cfg.seed).canonical_digest();
        const std::string d2 = run_quick_suite(cfg.seed).canonical_digest();
        rep.add(make("criterion-13", "identical config and seed give identical reports",
                     d1 == d2 ? 1.0 : 0.0, 1.0, d1 == d2, 0.0, t13.seconds()));
    }
    (void)timer;
    return rep;
}

} // namespace nsmild::checks
