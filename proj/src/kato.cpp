#include "nsmild/kato.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/parallel.hpp"
#include "nsmild/quadrature.hpp"
#include "nsmild/transforms.hpp"

namespace nsmild {

namespace {
// C^5 smoothstep: derivative 2772 x^5 (1-x)^5 integrates to 1 on [0,1].
double smoothstep5(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double x2 = x * x;
    const double x3 = x2 * x;
    return x3 * x3 * (462.0 + x * (-1980.0 + x * (3465.0 + x * (-3080.0 + x * (1386.0 - 252.0 * x)))));
}

double smoothstep5_prime(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    const double y = x * (1.0 - x);
    const double y2 = y * y;
    return 2772.0 * y2 * y2 * y;
}
} // namespace

CutoffProfile::CutoffProfile(double R_) : R(R_) {
    if (!(R > 0.0)) throw DomainError("CutoffProfile: R must be positive");
}

double CutoffProfile::ztilde(double tau) {
    if (tau <= 1.0) return 1.0;
    if (tau >= 2.0) return 0.0;
    return 1.0 - smoothstep5(tau - 1.0);
}

double CutoffProfile::ztilde_prime(double tau) {
    if (tau <= 1.0 || tau >= 2.0) return 0.0;
    return -smoothstep5_prime(tau - 1.0);
}

double CutoffProfile::z(double radius) const {
    return ztilde(std::log(radius * radius + 1.0) / R);
}

std::array<double, 3> CutoffProfile::grad_z(const std::array<double, 3>& x) const {
    const double rho2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    const double tau = std::log(rho2 + 1.0) / R;
    const double zp = ztilde_prime(tau);
    if (zp == 0.0) return {0.0, 0.0, 0.0};
    const double factor = zp / (R * (rho2 + 1.0)) * 2.0;
    return {factor * x[0], factor * x[1], factor * x[2]};
}

double CutoffProfile::plateau_radius() const { return std::sqrt(std::exp(R) - 1.0); }
double CutoffProfile::support_radius() const { return std::sqrt(std::exp(2.0 * R) - 1.0); }

void check_kato_geometry(const GridSpec& grid, const CutoffProfile& profile) {
    const double half = 0.5 * grid.box_length;
    if (std::exp(2.0 * profile.R) - 1.0 >= half * half)
        throw GeometryError("kato: support radius does not fit inside the box");
}

namespace {

struct Mode {
    double k1, k2, k3;  // physical wavenumbers
    double parity;      // e^{ik.c} = (-1)^{n1+n2+n3} for c at the box center
    cplx c[3];
};

// Modes with any component above threshold, with coefficients and the center
// phase folded in.
std::vector<Mode> significant_modes(const SpectralField& F, int components) {
    const int n = F.grid.points_per_axis;
    const double l = F.grid.box_length;
    double maxmod = 0.0;
    for (int c = 0; c < components; ++c)
        for (const auto& v : F.comp[c]) maxmod = std::max(maxmod, std::abs(v));
    const double threshold = 1e-13 * maxmod;
    std::vector<Mode> modes;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3) {
                const std::size_t idx = (static_cast<std::size_t>(i1) * n + i2) * n + i3;
                bool keep = false;
                for (int c = 0; c < components; ++c)
                    if (std::abs(F.comp[c][idx]) > threshold) keep = true;
                if (!keep) continue;
                Mode m;
                const int m1 = signed_mode(i1, n), m2 = signed_mode(i2, n), m3 = signed_mode(i3, n);
                m.k1 = 2.0 * 3.14159265358979323846 * m1 / l;
                m.k2 = 2.0 * 3.14159265358979323846 * m2 / l;
                m.k3 = 2.0 * 3.14159265358979323846 * m3 / l;
                m.parity = ((m1 + m2 + m3) % 2 == 0) ? 1.0 : -1.0;
                for (int c = 0; c < components; ++c) m.c[c] = F.comp[c][idx];
                for (int c = components; c < 3; ++c) m.c[c] = cplx(0.0, 0.0);
                modes.push_back(m);
            }
    return modes;
}

// phi_p(a) = int_0^1 t^p e^{iat} dt for p = 1, 2; eia = e^{ia} supplied.
cplx phi_p(int p, double a, cplx eia) {
    if (std::abs(a) < 1.0) {
        // series sum_j (ia)^j / (j! (j+p+1))
        cplx term(1.0, 0.0);
        cplx acc(1.0 / (p + 1.0), 0.0);
        const cplx ia(0.0, a);
        for (int j = 1; j <= 18; ++j) {
            term *= ia / static_cast<double>(j);
            acc += term / static_cast<double>(j + p + 1);
        }
        return acc;
    }
    const cplx i_unit(0.0, 1.0);
    const cplx f1 = -i_unit * eia / a + (eia - 1.0) / (a * a);
    if (p == 1) return f1;
    return -i_unit * eia / a + 2.0 * i_unit * f1 / a;  // p == 2
}

} // namespace

std::array<double, 3> ray_moment(int k, const VectorField& f, const std::array<double, 3>& x,
                                 int quadrature_nodes) {
    if (k != 0 && k != 1) throw DomainError("ray_moment: k must be 0 or 1");
    if (quadrature_nodes < 2) throw DomainError("ray_moment: need at least 2 nodes");
    const double half = 0.5 * f.grid.box_length;
    for (double xi : x)
        if (std::abs(xi) > half) throw DomainError("ray_moment: point outside the fundamental box");

    const SpectralField F = forward_transform(f);
    const std::vector<Mode> modes = significant_modes(F, 3);
    const GaussLegendre& gl = gauss_legendre_unit(quadrature_nodes);
    const int p = 2 - k;  // t^{m-1-k} at m = 3

    std::array<double, 3> result{0.0, 0.0, 0.0};
    for (int q = 0; q < quadrature_nodes; ++q) {
        const double t = gl.nodes[q];
        const double w = gl.weights[q] * std::pow(t, p);
        cplx acc[3] = {cplx(0, 0), cplx(0, 0), cplx(0, 0)};
        for (const Mode& m : modes) {
            const double a = m.k1 * x[0] + m.k2 * x[1] + m.k3 * x[2];
            const cplx phase = m.parity * cplx(std::cos(t * a), std::sin(t * a));
            for (int c = 0; c < 3; ++c) acc[c] += m.c[c] * phase;
        }
        for (int c = 0; c < 3; ++c) result[c] += w * acc[c].real();
    }
    return result;
}

namespace {

// Modal closed-form Q_k over the whole grid; mask (if nonempty) skips points
// where the value is not needed.
std::vector<std::array<double, 3>> modal_ray_grid(int k, const GridSpec& grid,
                                                  const SpectralField& F, int components,
                                                  const std::vector<unsigned char>& mask) {
    const int n = grid.points_per_axis;
    const double h = grid.spacing();
    const double half = 0.5 * grid.box_length;
    const std::vector<Mode> modes = significant_modes(F, components);
    const int p = 2 - k;

    std::vector<std::array<double, 3>> out(grid.samples(), {0.0, 0.0, 0.0});
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(out.size()); ++idx) {
        if (!mask.empty() && !mask[idx]) continue;
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const double x1 = i1 * h - half;
        const double x2 = i2 * h - half;
        const double x3 = i3 * h - half;
        cplx acc[3] = {cplx(0, 0), cplx(0, 0), cplx(0, 0)};
        for (const Mode& m : modes) {
            const double a = m.k1 * x1 + m.k2 * x2 + m.k3 * x3;
            const cplx eia(std::cos(a), std::sin(a));
            const cplx fp = m.parity * phi_p(p, a, eia);
            for (int c = 0; c < components; ++c) acc[c] += m.c[c] * fp;
        }
        for (int c = 0; c < 3; ++c) out[idx][c] = acc[c].real();
    }
    return out;
}

std::vector<unsigned char> annulus_mask(const GridSpec& grid, const CutoffProfile& profile) {
    const int n = grid.points_per_axis;
    const double h = grid.spacing();
    const double half = 0.5 * grid.box_length;
    const double lo2 = std::exp(profile.R) - 1.0;
    const double hi2 = std::exp(2.0 * profile.R) - 1.0;
    std::vector<unsigned char> mask(grid.samples(), 0);
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(mask.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const double x1 = i1 * h - half;
        const double x2 = i2 * h - half;
        const double x3 = i3 * h - half;
        const double rho2 = x1 * x1 + x2 * x2 + x3 * x3;
        if (rho2 > lo2 && rho2 < hi2) mask[idx] = 1;
    }
    return mask;
}

} // namespace

std::vector<std::array<double, 3>> ray_moment_grid(int k, const VectorField& f) {
    if (k != 0 && k != 1) throw DomainError("ray_moment_grid: k must be 0 or 1");
    return modal_ray_grid(k, f.grid, forward_transform(f), 3, {});
}

std::vector<double> ray_moment_grid_scalar(int k, const GridSpec& grid,
                                           const std::vector<double>& f) {
    if (k != 0 && k != 1) throw DomainError("ray_moment_grid_scalar: k must be 0 or 1");
    SpectralField F(grid);
    {
        ScalarSpectral s = forward_transform_scalar(grid, f);
        F.comp[0] = std::move(s.coeff);
    }
    const auto vec = modal_ray_grid(k, grid, F, 1, {});
    std::vector<double> out(vec.size());
    for (std::size_t i = 0; i < vec.size(); ++i) out[i] = vec[i][0];
    return out;
}

VectorField kato_approximate(const VectorField& f, const CutoffProfile& profile) {
    check_kato_geometry(f.grid, profile);
    const GridSpec& grid = f.grid;
    const int n = grid.points_per_axis;
    const double h = grid.spacing();
    const double half = 0.5 * grid.box_length;
    const double support2 = std::exp(2.0 * profile.R) - 1.0;

    const std::vector<unsigned char> mask = annulus_mask(grid, profile);
    const auto q1 = modal_ray_grid(1, grid, forward_transform(f), 3, mask);

    VectorField out(grid);
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(out.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const std::array<double, 3> x{i1 * h - half, i2 * h - half, i3 * h - half};
        const double rho2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        if (rho2 >= support2) continue;  // exact zero outside the support
        const double zr = profile.z(std::sqrt(rho2));
        const std::array<double, 3> gz = profile.grad_z(x);
        const std::array<double, 3>& g = q1[idx];
        // grad z . (x ^ Q1) contracted: (x.grad z) g_j - x_j (grad z . g)
        const double xg = x[0] * gz[0] + x[1] * gz[1] + x[2] * gz[2];
        const double gg = gz[0] * g[0] + gz[1] * g[1] + gz[2] * g[2];
        for (int c = 0; c < 3; ++c)
            out.comp[c][idx] = zr * f.comp[c][idx] + xg * g[c] - x[c] * gg;
    }
    return out;
}

namespace {

// max_x |d_j (f)_c| over all component/axis pairs, via spectral derivatives
double max_physical_derivative(const SpectralField& F) {
    const int n = F.grid.points_per_axis;
    const double l = F.grid.box_length;
    double result = 0.0;
    for (int c = 0; c < 3; ++c)
        for (int j = 0; j < 3; ++j) {
            ScalarSpectral d(F.grid);
            const cplx* src = F.comp[c].data();
            cplx* dst = d.coeff.data();
#pragma omp parallel for schedule(static)
            for (long idx = 0; idx < static_cast<long>(d.coeff.size()); ++idx) {
                const int i3 = static_cast<int>(idx) % n;
                const int i2 = (static_cast<int>(idx) / n) % n;
                const int i1 = static_cast<int>(idx) / (n * n);
                const int axis_idx = j == 0 ? i1 : (j == 1 ? i2 : i3);
                const double k = wavenumber(axis_idx, n, l);
                const cplx v = src[idx];
                dst[idx] = cplx(-k * v.imag(), k * v.real());
            }
            const std::vector<double> phys = inverse_transform_scalar(d);
            const double* p = phys.data();
            result = std::max(result, deterministic_max(phys.size(), [p](std::size_t i) {
                                  return std::abs(p[i]);
                              }));
        }
    return result;
}

} // namespace

double divergence_identity_residual(const VectorField& f, const CutoffProfile& profile) {
    check_kato_geometry(f.grid, profile);
    const GridSpec& grid = f.grid;
    const int n = grid.points_per_axis;
    const double h = grid.spacing();
    const double half = 0.5 * grid.box_length;

    const std::vector<double> div_f =
        inverse_transform_scalar(spectral_divergence(forward_transform(f)));
    const VectorField f_r = kato_approximate(f, profile);
    const SpectralField f_r_hat = forward_transform(f_r);
    const std::vector<double> div_fr = inverse_transform_scalar(spectral_divergence(f_r_hat));
    const std::vector<double> q0 = ray_moment_grid_scalar(0, grid, div_f);

    double scale = 0.0;
    double defect = 0.0;
    std::vector<double> lhs(grid.samples()), rhs1(grid.samples()), rhs2(grid.samples());
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(lhs.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const std::array<double, 3> x{i1 * h - half, i2 * h - half, i3 * h - half};
        const double rho = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        const std::array<double, 3> gz = profile.grad_z(x);
        lhs[idx] = div_fr[idx];
        rhs1[idx] = profile.z(rho) * div_f[idx];
        rhs2[idx] = (x[0] * gz[0] + x[1] * gz[1] + x[2] * gz[2]) * q0[idx];
    }
    const double* a = lhs.data();
    const double* b = rhs1.data();
    const double* c = rhs2.data();
    defect = deterministic_max(lhs.size(), [a, b, c](std::size_t i) {
        return std::abs(a[i] - b[i] - c[i]);
    });
    // identity terms vanish for divergence-free f; the derivative magnitude
    // of f_R keeps the normalization meaningful in that case
    scale = std::max({deterministic_max(lhs.size(), [a](std::size_t i) { return std::abs(a[i]); }),
                      deterministic_max(lhs.size(), [b](std::size_t i) { return std::abs(b[i]); }),
                      deterministic_max(lhs.size(), [c](std::size_t i) { return std::abs(c[i]); }),
                      max_physical_derivative(f_r_hat)});
    return scale > 0.0 ? defect / scale : defect;
}

} // namespace nsmild
