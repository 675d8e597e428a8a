#include "nsmild/field.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/parallel.hpp"

namespace nsmild {

namespace {
void require_grid3(const GridSpec& g, const char* who) {
    if (g.dimension != 3)
        throw DomainError(std::string(who) + ": grid fields are implemented for m = 3 only");
}
} // namespace

VectorField::VectorField(const GridSpec& g) : grid(g) {
    require_grid3(g, "VectorField");
    for (auto& c : comp) c.assign(g.samples(), 0.0);
}

bool VectorField::all_finite() const {
    for (const auto& c : comp)
        for (double v : c)
            if (!std::isfinite(v)) return false;
    return true;
}

SpectralField::SpectralField(const GridSpec& g) : grid(g) {
    require_grid3(g, "SpectralField");
    for (auto& c : comp) c.assign(g.samples(), cplx(0.0, 0.0));
}

double SpectralField::max_modulus() const {
    const std::size_t n = size();
    double m = 0.0;
    for (const auto& c : comp) {
        const cplx* p = c.data();
        m = std::max(m, deterministic_max(n, [p](std::size_t i) { return std::abs(p[i]); }));
    }
    return m;
}

double SpectralField::hermitian_defect() const {
    const int n = grid.points_per_axis;
    double defect = 0.0;
    for (const auto& c : comp) {
        const cplx* p = c.data();
        const double d = deterministic_max(size(), [p, n](std::size_t idx) {
            const int i3 = static_cast<int>(idx) % n;
            const int i2 = (static_cast<int>(idx) / n) % n;
            const int i1 = static_cast<int>(idx) / (n * n);
            const int j1 = (n - i1) % n;
            const int j2 = (n - i2) % n;
            const int j3 = (n - i3) % n;
            const std::size_t jdx =
                (static_cast<std::size_t>(j1) * n + j2) * n + j3;
            return std::abs(p[jdx] - std::conj(p[idx]));
        });
        defect = std::max(defect, d);
    }
    return defect;
}

ScalarSpectral::ScalarSpectral(const GridSpec& g) : grid(g) {
    require_grid3(g, "ScalarSpectral");
    coeff.assign(g.samples(), cplx(0.0, 0.0));
}

double ScalarSpectral::max_modulus() const {
    const cplx* p = coeff.data();
    return deterministic_max(coeff.size(), [p](std::size_t i) { return std::abs(p[i]); });
}

void axpy(double a, const VectorField& x, VectorField& y) {
    const std::size_t n = y.size();
    for (int c = 0; c < 3; ++c) {
        double* yp = y.comp[c].data();
        const double* xp = x.comp[c].data();
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(n); ++i) yp[i] += a * xp[i];
    }
}

void scale(VectorField& f, double a) {
    const std::size_t n = f.size();
    for (int c = 0; c < 3; ++c) {
        double* p = f.comp[c].data();
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(n); ++i) p[i] *= a;
    }
}

VectorField linear_combination(double a, const VectorField& x, double b, const VectorField& y) {
    VectorField out(x.grid);
    const std::size_t n = out.size();
    for (int c = 0; c < 3; ++c) {
        double* op = out.comp[c].data();
        const double* xp = x.comp[c].data();
        const double* yp = y.comp[c].data();
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(n); ++i) op[i] = a * xp[i] + b * yp[i];
    }
    return out;
}

void axpy_spectral(cplx a, const SpectralField& x, SpectralField& y) {
    const std::size_t n = y.size();
    for (int c = 0; c < 3; ++c) {
        cplx* yp = y.comp[c].data();
        const cplx* xp = x.comp[c].data();
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(n); ++i) yp[i] += a * xp[i];
    }
}

} // namespace nsmild
