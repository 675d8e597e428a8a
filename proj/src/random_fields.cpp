#include "nsmild/random_fields.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/norms.hpp"
#include "nsmild/operators.hpp"
#include "nsmild/transforms.hpp"

namespace nsmild {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double Rng::uniform() {
    // top 53 bits -> [0,1); identical on every conforming mt19937_64
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

VectorField random_smooth_field(const GridSpec& grid, std::uint64_t seed, double n0) {
    const int n = grid.points_per_axis;
    if (n0 <= 0.0) n0 = n / 8.0;
    Rng rng(seed);
    SpectralField F(grid);
    const int n_max = std::min(n / 3, 10);
    // fixed lexicographic order over the Hermitian half-lattice
    for (int c = 0; c < 3; ++c) {
        for (int m1 = -n_max; m1 <= n_max; ++m1)
            for (int m2 = -n_max; m2 <= n_max; ++m2)
                for (int m3 = -n_max; m3 <= n_max; ++m3) {
                    if (m1 == 0 && m2 == 0 && m3 == 0) continue;
                    // take only the half with first nonzero component > 0
                    if (m1 < 0 || (m1 == 0 && (m2 < 0 || (m2 == 0 && m3 < 0)))) continue;
                    const double mag2 = m1 * m1 + m2 * m2 + m3 * m3;
                    const double env = std::exp(-mag2 / (n0 * n0));
                    const cplx v(env * rng.normal(), env * rng.normal());
                    const std::size_t idx =
                        (static_cast<std::size_t>(storage_index(m1, n)) * n +
                         storage_index(m2, n)) * n + storage_index(m3, n);
                    const std::size_t jdx =
                        (static_cast<std::size_t>(storage_index(-m1, n)) * n +
                         storage_index(-m2, n)) * n + storage_index(-m3, n);
                    F.comp[c][idx] = v;
                    F.comp[c][jdx] = std::conj(v);
                }
    }
    VectorField f = inverse_transform(F);
    const double norm = l2_norm(f);
    if (norm > 0.0) scale(f, 1.0 / norm);
    return f;
}

VectorField random_divergence_free_field(const GridSpec& grid, std::uint64_t seed, double n0) {
    VectorField f = random_smooth_field(grid, seed, n0);
    VectorField p = leray_project(f);
    const double norm = l2_norm(p);
    if (norm > 0.0) scale(p, 1.0 / norm);
    return p;
}

std::vector<double> gaussian_bump(const GridSpec& grid, const std::array<double, 3>& center,
                                  double sigma, double amplitude) {
    const int n = grid.points_per_axis;
    const double h = grid.spacing();
    std::vector<double> out(grid.samples());
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(out.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const double d1 = i1 * h - center[0];
        const double d2 = i2 * h - center[1];
        const double d3 = i3 * h - center[2];
        out[idx] = amplitude * std::exp(-(d1 * d1 + d2 * d2 + d3 * d3) / (2.0 * sigma * sigma));
    }
    return out;
}

VectorField gaussian_envelope_field(const GridSpec& grid, std::uint64_t seed,
                                    const std::array<double, 3>& center, double sigma) {
    Rng rng(seed);
    VectorField f(grid);
    for (int c = 0; c < 3; ++c) {
        // few bumps per component, jittered around the center
        for (int b = 0; b < 3; ++b) {
            std::array<double, 3> pos;
            for (int a = 0; a < 3; ++a) pos[a] = center[a] + sigma * rng.uniform(-0.5, 0.5);
            const double amp = rng.uniform(-1.0, 1.0);
            const double width = sigma * rng.uniform(0.7, 1.3);
            const auto bump = gaussian_bump(grid, pos, width, amp);
            for (std::size_t i = 0; i < bump.size(); ++i) f.comp[c][i] += bump[i];
        }
    }
    const double norm = l2_norm(f);
    if (norm > 0.0) scale(f, 1.0 / norm);
    return f;
}

VectorField localized_divergence_free_field(const GridSpec& grid, std::uint64_t seed,
                                            const std::array<double, 3>& center, double sigma) {
    const VectorField potential = gaussian_envelope_field(grid, seed, center, sigma);
    SpectralField A = forward_transform(potential);
    // curl in spectral space: (ik x A)
    const int n = grid.points_per_axis;
    const double l = grid.box_length;
    SpectralField C(grid);
    const cplx* a1 = A.comp[0].data();
    const cplx* a2 = A.comp[1].data();
    const cplx* a3 = A.comp[2].data();
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(C.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const double k1 = wavenumber(i1, n, l);
        const double k2 = wavenumber(i2, n, l);
        const double k3 = wavenumber(i3, n, l);
        const cplx i_unit(0.0, 1.0);
        C.comp[0][idx] = i_unit * (k2 * a3[idx] - k3 * a2[idx]);
        C.comp[1][idx] = i_unit * (k3 * a1[idx] - k1 * a3[idx]);
        C.comp[2][idx] = i_unit * (k1 * a2[idx] - k2 * a1[idx]);
    }
    VectorField f = inverse_transform(C);
    const double norm = l2_norm(f);
    if (norm > 0.0) scale(f, 1.0 / norm);
    return f;
}

VectorField taylor_green(const GridSpec& grid, double l2_norm_target) {
    const int n = grid.points_per_axis;
    const double h = grid.spacing();
    const double kappa = 2.0 * kPi / grid.box_length;  // fundamental wavenumber
    VectorField f(grid);
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(f.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const double x1 = kappa * i1 * h;
        const double x2 = kappa * i2 * h;
        const double x3 = kappa * i3 * h;
        f.comp[0][idx] = std::sin(x1) * std::cos(x2) * std::cos(x3);
        f.comp[1][idx] = -std::cos(x1) * std::sin(x2) * std::cos(x3);
        f.comp[2][idx] = 0.0;
    }
    const double norm = l2_norm(f);
    if (norm > 0.0 && l2_norm_target > 0.0) scale(f, l2_norm_target / norm);
    return f;
}

VectorField single_mode_field(const GridSpec& grid, const std::array<int, 3>& mode,
                              const std::array<double, 3>& amplitude) {
    const double dot = mode[0] * amplitude[0] + mode[1] * amplitude[1] + mode[2] * amplitude[2];
    if (std::abs(dot) > 1e-14)
        throw DomainError("single_mode_field: amplitude must be orthogonal to the mode");
    const int n = grid.points_per_axis;
    const double h = grid.spacing();
    const double scale_k = 2.0 * kPi / grid.box_length;
    VectorField f(grid);
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(f.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const double phase = scale_k * (mode[0] * i1 + mode[1] * i2 + mode[2] * i3) * h;
        const double c = std::cos(phase);
        f.comp[0][idx] = amplitude[0] * c;
        f.comp[1][idx] = amplitude[1] * c;
        f.comp[2][idx] = amplitude[2] * c;
    }
    return f;
}

} // namespace nsmild
