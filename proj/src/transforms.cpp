#include "nsmild/transforms.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/fft.hpp"
#include "nsmild/parallel.hpp"

namespace nsmild {

namespace {

std::vector<cplx> to_complex(const std::vector<double>& f) {
    std::vector<cplx> out(f.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(f.size()); ++i) out[i] = cplx(f[i], 0.0);
    return out;
}

} // namespace

SpectralField forward_transform(const VectorField& f) {
    if (!f.all_finite()) throw RejectedInputError("forward_transform: non-finite sample");
    const int n = f.grid.points_per_axis;
    const double norm = 1.0 / static_cast<double>(f.grid.samples());
    SpectralField F(f.grid);
    for (int c = 0; c < 3; ++c) {
        std::vector<cplx> data = to_complex(f.comp[c]);
        fft3_forward(data, n);
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(data.size()); ++i) data[i] *= norm;
        F.comp[c] = std::move(data);
    }
    return F;
}

VectorField inverse_transform(const SpectralField& F) {
    const double scale = F.max_modulus();
    if (scale > 0.0) {
        const double defect = F.hermitian_defect();
        if (defect > 1e-10 * scale)
            throw SymmetryError("inverse_transform: Hermitian symmetry violated");
    }
    const int n = F.grid.points_per_axis;
    VectorField f(F.grid);
    const double field_scale = scale * F.grid.samples();
    for (int c = 0; c < 3; ++c) {
        std::vector<cplx> data = F.comp[c];
        fft3_inverse(data, n);
        const cplx* p = data.data();
        const double imag_residue =
            deterministic_max(data.size(), [p](std::size_t i) { return std::abs(p[i].imag()); });
        if (field_scale > 0.0 && imag_residue > 1e-10 * field_scale)
            throw SymmetryError("inverse_transform: imaginary residue above tolerance");
        double* out = f.comp[c].data();
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(data.size()); ++i) out[i] = data[i].real();
    }
    return f;
}

ScalarSpectral forward_transform_scalar(const GridSpec& grid, const std::vector<double>& f) {
    if (f.size() != grid.samples())
        throw RejectedInputError("forward_transform_scalar: size mismatch");
    ScalarSpectral F(grid);
    std::vector<cplx> data = to_complex(f);
    fft3_forward(data, grid.points_per_axis);
    const double norm = 1.0 / static_cast<double>(grid.samples());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(data.size()); ++i) data[i] *= norm;
    F.coeff = std::move(data);
    return F;
}

std::vector<double> inverse_transform_scalar(const ScalarSpectral& F) {
    std::vector<cplx> data = F.coeff;
    fft3_inverse(data, F.grid.points_per_axis);
    std::vector<double> out(data.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(data.size()); ++i) out[i] = data[i].real();
    return out;
}

ScalarSpectral spectral_divergence(const SpectralField& F) {
    const int n = F.grid.points_per_axis;
    const double l = F.grid.box_length;
    ScalarSpectral div(F.grid);
    cplx* out = div.coeff.data();
    const cplx* f1 = F.comp[0].data();
    const cplx* f2 = F.comp[1].data();
    const cplx* f3 = F.comp[2].data();
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(div.coeff.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const double k1 = wavenumber(i1, n, l);
        const double k2 = wavenumber(i2, n, l);
        const double k3 = wavenumber(i3, n, l);
        const cplx s = k1 * f1[idx] + k2 * f2[idx] + k3 * f3[idx];
        out[idx] = cplx(-s.imag(), s.real());  // i * s
    }
    return div;
}

SpectralField spectral_gradient(const ScalarSpectral& p) {
    const int n = p.grid.points_per_axis;
    const double l = p.grid.box_length;
    SpectralField g(p.grid);
    const cplx* src = p.coeff.data();
    for (int c = 0; c < 3; ++c) {
        cplx* out = g.comp[c].data();
#pragma omp parallel for schedule(static)
        for (long idx = 0; idx < static_cast<long>(p.coeff.size()); ++idx) {
            const int i3 = static_cast<int>(idx) % n;
            const int i2 = (static_cast<int>(idx) / n) % n;
            const int i1 = static_cast<int>(idx) / (n * n);
            const int axis_idx = c == 0 ? i1 : (c == 1 ? i2 : i3);
            const double k = wavenumber(axis_idx, n, l);
            const cplx v = src[idx];
            out[idx] = cplx(-k * v.imag(), k * v.real());
        }
    }
    return g;
}

double gradient_coefficient_scale(const SpectralField& F) {
    const int n = F.grid.points_per_axis;
    const double l = F.grid.box_length;
    double scale = 0.0;
    for (int c = 0; c < 3; ++c) {
        const cplx* p = F.comp[c].data();
        scale = std::max(scale, deterministic_max(F.size(), [p, n, l](std::size_t idx) {
                             const int i3 = static_cast<int>(idx) % n;
                             const int i2 = (static_cast<int>(idx) / n) % n;
                             const int i1 = static_cast<int>(idx) / (n * n);
                             const double k1 = wavenumber(i1, n, l);
                             const double k2 = wavenumber(i2, n, l);
                             const double k3 = wavenumber(i3, n, l);
                             const double kk = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
                             return kk * std::abs(p[idx]);
                         }));
    }
    return scale;
}

double divergence_defect_ratio(const SpectralField& F) {
    const double scale = gradient_coefficient_scale(F);
    if (scale == 0.0) return 0.0;
    return spectral_divergence(F).max_modulus() / scale;
}

bool is_divergence_free(const VectorField& f, double tol) {
    return divergence_defect_ratio(forward_transform(f)) <= tol;
}

} // namespace nsmild
