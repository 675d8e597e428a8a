#include "nsmild/norms.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/parallel.hpp"
#include "nsmild/transforms.hpp"

namespace nsmild {

double lp_norm(const VectorField& f, double p) {
    const std::size_t n = f.size();
    const double* c1 = f.comp[0].data();
    const double* c2 = f.comp[1].data();
    const double* c3 = f.comp[2].data();
    auto modulus = [c1, c2, c3](std::size_t i) {
        return std::sqrt(c1[i] * c1[i] + c2[i] * c2[i] + c3[i] * c3[i]);
    };
    if (p == lp_infinity || std::isinf(p)) return deterministic_max(n, modulus);
    if (p < 1.0) throw DomainError("lp_norm: p must be >= 1 (or infinity)");
    const double vol = f.grid.cell_volume();
    if (p == 1.0) return vol * deterministic_sum(n, modulus);
    if (p == 2.0) {
        const double s = deterministic_sum(n, [c1, c2, c3](std::size_t i) {
            return c1[i] * c1[i] + c2[i] * c2[i] + c3[i] * c3[i];
        });
        return std::sqrt(vol * s);
    }
    const double s =
        deterministic_sum(n, [&, p](std::size_t i) { return std::pow(modulus(i), p); });
    return std::pow(vol * s, 1.0 / p);
}

double lp_norm_scalar(const GridSpec& grid, const std::vector<double>& f, double p) {
    const std::size_t n = f.size();
    const double* d = f.data();
    auto modulus = [d](std::size_t i) { return std::abs(d[i]); };
    if (p == lp_infinity || std::isinf(p)) return deterministic_max(n, modulus);
    if (p < 1.0) throw DomainError("lp_norm: p must be >= 1 (or infinity)");
    const double vol = grid.cell_volume();
    if (p == 1.0) return vol * deterministic_sum(n, modulus);
    if (p == 2.0)
        return std::sqrt(vol * deterministic_sum(n, [d](std::size_t i) { return d[i] * d[i]; }));
    const double s =
        deterministic_sum(n, [&, p](std::size_t i) { return std::pow(modulus(i), p); });
    return std::pow(vol * s, 1.0 / p);
}

double inner_product(const VectorField& a, const VectorField& b) {
    const std::size_t n = a.size();
    double total = 0.0;
    for (int c = 0; c < 3; ++c) {
        const double* ap = a.comp[c].data();
        const double* bp = b.comp[c].data();
        total += deterministic_sum(n, [ap, bp](std::size_t i) { return ap[i] * bp[i]; });
    }
    return total * a.grid.cell_volume();
}

double l2_norm(const VectorField& f) { return lp_norm(f, 2.0); }

namespace {
double lattice_measure(const GridSpec& g) {
    // L^m: Riemann L2 norm^2 equals L^m sum |F|^2 under the DFT/N^m convention
    return std::pow(g.box_length, g.dimension);
}
} // namespace

double l2_norm_spectral(const SpectralField& F) {
    double s = 0.0;
    for (int c = 0; c < 3; ++c) {
        const cplx* p = F.comp[c].data();
        s += deterministic_sum(F.size(), [p](std::size_t i) { return std::norm(p[i]); });
    }
    return std::sqrt(lattice_measure(F.grid) * s);
}

double inner_product_spectral(const SpectralField& A, const SpectralField& B) {
    double s = 0.0;
    for (int c = 0; c < 3; ++c) {
        const cplx* ap = A.comp[c].data();
        const cplx* bp = B.comp[c].data();
        s += deterministic_sum(A.size(), [ap, bp](std::size_t i) {
            return ap[i].real() * bp[i].real() + ap[i].imag() * bp[i].imag();
        });
    }
    return lattice_measure(A.grid) * s;
}

double gradient_inner_product_spectral(const SpectralField& A, const SpectralField& B) {
    const int n = A.grid.points_per_axis;
    const double l = A.grid.box_length;
    double s = 0.0;
    for (int c = 0; c < 3; ++c) {
        const cplx* ap = A.comp[c].data();
        const cplx* bp = B.comp[c].data();
        s += deterministic_sum(A.size(), [ap, bp, n, l](std::size_t idx) {
            const int i3 = static_cast<int>(idx) % n;
            const int i2 = (static_cast<int>(idx) / n) % n;
            const int i1 = static_cast<int>(idx) / (n * n);
            const double k1 = wavenumber(i1, n, l);
            const double k2 = wavenumber(i2, n, l);
            const double k3 = wavenumber(i3, n, l);
            const double kk = k1 * k1 + k2 * k2 + k3 * k3;
            return kk * (ap[idx].real() * bp[idx].real() + ap[idx].imag() * bp[idx].imag());
        });
    }
    return lattice_measure(A.grid) * s;
}

double sobolev_norm_spectral(const SpectralField& F, double sexp) {
    const int n = F.grid.points_per_axis;
    const double l = F.grid.box_length;
    double s = 0.0;
    for (int c = 0; c < 3; ++c) {
        const cplx* p = F.comp[c].data();
        s += deterministic_sum(F.size(), [p, n, l, sexp](std::size_t idx) {
            const int i3 = static_cast<int>(idx) % n;
            const int i2 = (static_cast<int>(idx) / n) % n;
            const int i1 = static_cast<int>(idx) / (n * n);
            const double k1 = wavenumber(i1, n, l);
            const double k2 = wavenumber(i2, n, l);
            const double k3 = wavenumber(i3, n, l);
            const double kk = k1 * k1 + k2 * k2 + k3 * k3;
            return std::pow(1.0 + kk, sexp) * std::norm(p[idx]);
        });
    }
    return std::sqrt(lattice_measure(F.grid) * s);
}

double central_halfbox_mass_fraction(const VectorField& f) {
    const int n = f.grid.points_per_axis;
    const double* c1 = f.comp[0].data();
    const double* c2 = f.comp[1].data();
    const double* c3 = f.comp[2].data();
    auto density = [&](std::size_t i) {
        return c1[i] * c1[i] + c2[i] * c2[i] + c3[i] * c3[i];
    };
    const double total = deterministic_sum(f.size(), density);
    if (total == 0.0) return 1.0;
    const int lo = n / 4, hi = 3 * n / 4;
    const double central = deterministic_sum(f.size(), [&, n](std::size_t idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const bool in = i1 >= lo && i1 < hi && i2 >= lo && i2 < hi && i3 >= lo && i3 < hi;
        return in ? density(idx) : 0.0;
    });
    return central / total;
}

} // namespace nsmild
