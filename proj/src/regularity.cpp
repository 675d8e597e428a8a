#include "nsmild/regularity.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/norms.hpp"
#include "nsmild/operators.hpp"
#include "nsmild/transforms.hpp"

namespace nsmild {

VectorField compute_fluctuation(const Trajectory& traj, double t) {
    const int it = traj.index_of_time(t);
    if (it < 0) throw DomainError("compute_fluctuation: t is not a stored time");
    const VectorField heat = heat_semigroup(t, traj.states[0]);
    return linear_combination(1.0, traj.states[static_cast<std::size_t>(it)], -1.0, heat);
}

double l1r_norm(const VectorField& v, double r) {
    if (r < 0.0 || r >= 1.0) throw DomainError("l1r_norm: r must lie in [0, 1)");
    if (r == 0.0) return lp_norm(v, 1.0);
    return lp_norm(bessel_potential(r, +1, v), 1.0);
}

namespace {

HolderFit fit_loglog(std::vector<double> offsets, std::vector<double> norms,
                     std::string descriptor) {
    HolderFit fit;
    fit.offsets = std::move(offsets);
    fit.norms = std::move(norms);
    fit.descriptor = std::move(descriptor);
    for (std::size_t i = 1; i < fit.offsets.size(); ++i)
        if (!(fit.offsets[i] < fit.offsets[i - 1]))
            throw DomainError("HolderFit: offsets must be strictly decreasing");

    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < fit.offsets.size(); ++i) {
        if (fit.norms[i] > 0.0) {
            lx.push_back(std::log(fit.offsets[i]));
            ly.push_back(std::log(fit.norms[i]));
        }
    }
    if (lx.size() < 3) {
        fit.degenerate = true;
        return fit;
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.slope * sx) / n;
    double rss = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double e = ly[i] - (fit.slope * lx[i] + intercept);
        rss += e * e;
    }
    fit.fit_residual = std::sqrt(rss / n);
    return fit;
}

} // namespace

HolderFit temporal_holder_fit(const Trajectory& traj, double t, double r,
                              const std::vector<double>& offsets) {
    if (r < 0.0 || r >= 1.0) throw DomainError("temporal_holder_fit: r must lie in [0, 1)");
    if (offsets.size() < 3) throw FitError("temporal_holder_fit: need at least 3 offsets");
    const VectorField v_t = compute_fluctuation(traj, t);
    std::vector<double> norms;
    norms.reserve(offsets.size());
    for (double h : offsets) {
        const VectorField v_th = compute_fluctuation(traj, t + h);
        norms.push_back(l1r_norm(linear_combination(1.0, v_th, -1.0, v_t), r));
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "temporal r=%.3g t=%.6g", r, t);
    return fit_loglog(offsets, std::move(norms), buf);
}

SpatialHolderResult spatial_holder_fit(const VectorField& v, double p, double r,
                                       const std::vector<std::array<double, 3>>& offsets) {
    const int m = v.grid.dimension;
    if (r < 0.0 || r >= 1.0) throw DomainError("spatial_holder_fit: r must lie in [0, 1)");
    if (p < 1.0 || p >= static_cast<double>(m) / (m - 1 + r))
        throw DomainError("spatial_holder_fit: p outside [1, m/(m-1+r))");
    if (offsets.size() < 3) throw FitError("spatial_holder_fit: need at least 3 offsets");

    const double vr = lp_norm(bessel_potential(r, +1, v), p);
    std::vector<double> mags, norms;
    for (const auto& h : offsets) {
        const double mag = std::sqrt(h[0] * h[0] + h[1] * h[1] + h[2] * h[2]);
        if (mag > 1.0) throw DomainError("spatial_holder_fit: |h| must be <= 1");
        mags.push_back(mag);
        const VectorField shifted = translate(h, v);
        norms.push_back(lp_norm(linear_combination(1.0, shifted, -1.0, v), p));
    }

    SpatialHolderResult res;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "spatial p=%.3g r=%.3g", p, r);
    res.fit = fit_loglog(mags, norms, buf);
    for (std::size_t i = 0; i < norms.size(); ++i) {
        const double denom = std::pow(mags[i], r) * vr;
        const double ratio = denom > 0.0 ? norms[i] / denom : 0.0;
        res.ratios.push_back(ratio);
        res.fitted_c = std::max(res.fitted_c, ratio);
    }
    return res;
}

std::vector<double> smoothing_difference_check(const VectorField& f, double epsilon,
                                               const std::vector<double>& h_values) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw DomainError("smoothing_difference_check: epsilon must lie in (0, 1]");
    const double base = lp_norm(f, 1.0);
    if (base == 0.0) throw DomainError("smoothing_difference_check: f must be nonzero");

    std::vector<double> out;
    out.reserve(h_values.size());
    const VectorField smoothed = bessel_potential(2.0 * epsilon, -1, f);
    // (I-D)^{-eps}: bessel exponent r/2 = eps, so r = 2 eps
    for (double h : h_values) {
        if (h < 0.0) throw DomainError("smoothing_difference_check: h must be >= 0");
        const VectorField heated = heat_semigroup(h, smoothed);
        out.push_back(lp_norm(linear_combination(1.0, smoothed, -1.0, heated), 1.0) / base);
    }
    return out;
}

InterpolationRecord interpolation_check(const VectorField& v, double p) {
    if (!(p > 1.0 && p < 2.0)) throw DomainError("interpolation_check: p must lie in (1, 2)");
    InterpolationRecord rec;
    const double n1 = lp_norm(v, 1.0);
    const double n2 = lp_norm(v, 2.0);
    if (n1 == 0.0 || n2 == 0.0) {
        rec.degenerate = true;
        return rec;
    }
    const double theta = 2.0 * (1.0 / p - 0.5);
    rec.lp = lp_norm(v, p);
    rec.bound = std::pow(n1, theta) * std::pow(n2, 1.0 - theta);
    rec.ratio = rec.lp / rec.bound;
    return rec;
}

} // namespace nsmild
