#include "nsmild/reference.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/grid.hpp"
#include "nsmild/transforms.hpp"

namespace nsmild::reference {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void dft_line(const std::vector<cplx>& in, std::vector<cplx>& out, bool inverse) {
    const int n = static_cast<int>(in.size());
    out.assign(n, cplx(0.0, 0.0));
    const double sign = inverse ? 1.0 : -1.0;
    for (int k = 0; k < n; ++k) {
        cplx acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            const double a = sign * kTwoPi * (static_cast<long long>(j) * k % n) / n;
            acc += in[j] * cplx(std::cos(a), std::sin(a));
        }
        out[k] = acc;
    }
}

namespace {

void dft3_axis(std::vector<cplx>& data, int n, int axis, bool inverse) {
    std::vector<cplx> line(n), out(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t base, stride;
            if (axis == 0) {
                base = static_cast<std::size_t>(a) * n + b;
                stride = static_cast<std::size_t>(n) * n;
            } else if (axis == 1) {
                base = static_cast<std::size_t>(a) * n * n + b;
                stride = n;
            } else {
                base = (static_cast<std::size_t>(a) * n + b) * n;
                stride = 1;
            }
            for (int j = 0; j < n; ++j) line[j] = data[base + j * stride];
            dft_line(line, out, inverse);
            for (int j = 0; j < n; ++j) data[base + j * stride] = out[j];
        }
}

} // namespace

SpectralField forward_transform_naive(const VectorField& f) {
    const int n = f.grid.points_per_axis;
    SpectralField F(f.grid);
    const double norm = 1.0 / static_cast<double>(f.grid.samples());
    for (int c = 0; c < 3; ++c) {
        std::vector<cplx> data(f.comp[c].begin(), f.comp[c].end());
        for (int axis = 0; axis < 3; ++axis) dft3_axis(data, n, axis, false);
        for (auto& v : data) v *= norm;
        F.comp[c] = std::move(data);
    }
    return F;
}

VectorField inverse_transform_naive(const SpectralField& F) {
    const int n = F.grid.points_per_axis;
    VectorField f(F.grid);
    for (int c = 0; c < 3; ++c) {
        std::vector<cplx> data = F.comp[c];
        for (int axis = 0; axis < 3; ++axis) dft3_axis(data, n, axis, true);
        for (std::size_t i = 0; i < data.size(); ++i) f.comp[c][i] = data[i].real();
    }
    return f;
}

std::vector<double> finite_difference_divergence(const VectorField& f) {
    const int n = f.grid.points_per_axis;
    const double h = f.grid.spacing();
    std::vector<double> div(f.size(), 0.0);
    auto at = [n](int i1, int i2, int i3) {
        auto wrap = [n](int i) { return (i % n + n) % n; };
        return (static_cast<std::size_t>(wrap(i1)) * n + wrap(i2)) * n + wrap(i3);
    };
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3) {
                const double d1 =
                    (f.comp[0][at(i1 + 1, i2, i3)] - f.comp[0][at(i1 - 1, i2, i3)]) / (2 * h);
                const double d2 =
                    (f.comp[1][at(i1, i2 + 1, i3)] - f.comp[1][at(i1, i2 - 1, i3)]) / (2 * h);
                const double d3 =
                    (f.comp[2][at(i1, i2, i3 + 1)] - f.comp[2][at(i1, i2, i3 - 1)]) / (2 * h);
                div[at(i1, i2, i3)] = d1 + d2 + d3;
            }
    return div;
}

VectorField translate_by_cells(const VectorField& f, const std::array<int, 3>& cells) {
    const int n = f.grid.points_per_axis;
    VectorField out(f.grid);
    auto wrap = [n](int i) { return (i % n + n) % n; };
    for (int c = 0; c < 3; ++c)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    // (U(h)w)(x) = w(x+h): sample at shifted source index
                    const std::size_t src =
                        (static_cast<std::size_t>(wrap(i1 + cells[0])) * n +
                         wrap(i2 + cells[1])) * n + wrap(i3 + cells[2]);
                    const std::size_t dst =
                        (static_cast<std::size_t>(i1) * n + i2) * n + i3;
                    out.comp[c][dst] = f.comp[c][src];
                }
    return out;
}

SpectralField nonlinear_spectral_direct(const SpectralField& u_hat) {
    const GridSpec& grid = u_hat.grid;
    const int n = grid.points_per_axis;
    const double l = grid.box_length;
    const int cut = n / 3;
    if (n > 16) throw DomainError("nonlinear_spectral_direct: direct convolution only for N <= 16");

    struct Mode {
        int m1, m2, m3;
        std::size_t idx;
    };
    std::vector<Mode> modes;
    for (int m1 = -cut; m1 <= cut; ++m1)
        for (int m2 = -cut; m2 <= cut; ++m2)
            for (int m3 = -cut; m3 <= cut; ++m3)
                modes.push_back({m1, m2, m3,
                                 (static_cast<std::size_t>(storage_index(m1, n)) * n +
                                  storage_index(m2, n)) * n + storage_index(m3, n)});

    SpectralField out(grid);
    // (u.grad u)_a(k) = sum_{p+q=k} i q_j u_j(p) u_a(q), truncated to |k|<=cut
    const double kunit = kTwoPi / l;
    for (const Mode& p : modes)
        for (const Mode& q : modes) {
            const int k1 = p.m1 + q.m1, k2 = p.m2 + q.m2, k3 = p.m3 + q.m3;
            if (std::abs(k1) > cut || std::abs(k2) > cut || std::abs(k3) > cut) continue;
            const std::size_t kid = (static_cast<std::size_t>(storage_index(k1, n)) * n +
                                     storage_index(k2, n)) * n + storage_index(k3, n);
            const cplx dot =
                kunit * (static_cast<double>(q.m1) * u_hat.comp[0][p.idx] +
                         static_cast<double>(q.m2) * u_hat.comp[1][p.idx] +
                         static_cast<double>(q.m3) * u_hat.comp[2][p.idx]);
            const cplx i_dot(-dot.imag(), dot.real());
            for (int a = 0; a < 3; ++a) out.comp[a][kid] += i_dot * u_hat.comp[a][q.idx];
        }
    for (int a = 0; a < 3; ++a) out.comp[a][0] = cplx(0.0, 0.0);
    return out;
}

double lp_norm_serial(const VectorField& f, double p) {
    const std::size_t n = f.size();
    double acc = 0.0;
    double maxmod = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double m = std::sqrt(f.comp[0][i] * f.comp[0][i] + f.comp[1][i] * f.comp[1][i] +
                                   f.comp[2][i] * f.comp[2][i]);
        maxmod = std::max(maxmod, m);
        if (p >= 1.0) acc += std::pow(m, p);
    }
    if (p < 1.0 || std::isinf(p)) return maxmod;
    return std::pow(acc * f.grid.cell_volume(), 1.0 / p);
}

void heat_multiplier_serial(SpectralField& F, double t) {
    const int n = F.grid.points_per_axis;
    const double l = F.grid.box_length;
    for (int c = 0; c < 3; ++c)
        for (std::size_t idx = 0; idx < F.size(); ++idx) {
            const int i3 = static_cast<int>(idx) % n;
            const int i2 = (static_cast<int>(idx) / n) % n;
            const int i1 = static_cast<int>(idx) / (n * n);
            const double k1 = wavenumber(i1, n, l);
            const double k2 = wavenumber(i2, n, l);
            const double k3 = wavenumber(i3, n, l);
            F.comp[c][idx] *= std::exp(-t * (k1 * k1 + k2 * k2 + k3 * k3));
        }
}

} // namespace nsmild::reference
