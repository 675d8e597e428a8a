#include "nsmild/operators.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/fft.hpp"
#include "nsmild/transforms.hpp"

namespace nsmild {

MultiplierSpec MultiplierSpec::heat(double t) {
    if (t < 0.0) throw DomainError("heat multiplier: t must be >= 0");
    MultiplierSpec s{Kind::heat};
    s.t = t;
    return s;
}

MultiplierSpec MultiplierSpec::leray() { return MultiplierSpec{Kind::leray}; }

MultiplierSpec MultiplierSpec::bessel(double r, int sign) {
    if (r < 0.0) throw DomainError("bessel multiplier: r must be >= 0");
    if (sign != +1 && sign != -1) throw DomainError("bessel multiplier: sign must be +-1");
    MultiplierSpec s{Kind::bessel};
    s.r = r;
    s.sign = sign;
    return s;
}

MultiplierSpec MultiplierSpec::chi(double r) {
    if (!(r > 0.0)) throw DomainError("chi multiplier: r must be > 0");
    MultiplierSpec s{Kind::chi};
    s.r = r;
    return s;
}

MultiplierSpec MultiplierSpec::translate(const std::array<double, 3>& h) {
    MultiplierSpec s{Kind::translate};
    s.shift = h;
    return s;
}

namespace {

// Loop over the lattice applying a per-mode action that sees (k1,k2,k3) and
// the three component coefficients in place.
template <class Fn>
void for_each_mode(SpectralField& F, Fn&& fn) {
    const int n = F.grid.points_per_axis;
    const double l = F.grid.box_length;
    cplx* f1 = F.comp[0].data();
    cplx* f2 = F.comp[1].data();
    cplx* f3 = F.comp[2].data();
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(F.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        const double k1 = wavenumber(i1, n, l);
        const double k2 = wavenumber(i2, n, l);
        const double k3 = wavenumber(i3, n, l);
        fn(k1, k2, k3, f1[idx], f2[idx], f3[idx]);
    }
}

} // namespace

void apply_multiplier(SpectralField& F, const MultiplierSpec& spec) {
    switch (spec.kind) {
        case MultiplierSpec::Kind::heat: {
            const double t = spec.t;
            if (t < 0.0) throw DomainError("heat multiplier: t must be >= 0");
            for_each_mode(F, [t](double k1, double k2, double k3, cplx& a, cplx& b, cplx& c) {
                const double m = std::exp(-t * (k1 * k1 + k2 * k2 + k3 * k3));
                a *= m;
                b *= m;
                c *= m;
            });
            break;
        }
        case MultiplierSpec::Kind::leray: {
            // k = 0: (I - P) defined as 0, so P is the identity there.
            for_each_mode(F, [](double k1, double k2, double k3, cplx& a, cplx& b, cplx& c) {
                const double kk = k1 * k1 + k2 * k2 + k3 * k3;
                if (kk == 0.0) return;
                const cplx kf = (k1 * a + k2 * b + k3 * c) / kk;
                a -= k1 * kf;
                b -= k2 * kf;
                c -= k3 * kf;
            });
            break;
        }
        case MultiplierSpec::Kind::bessel: {
            const double e = spec.sign * spec.r / 2.0;
            if (spec.r < 0.0) throw DomainError("bessel multiplier: r must be >= 0");
            for_each_mode(F, [e](double k1, double k2, double k3, cplx& a, cplx& b, cplx& c) {
                const double m = std::pow(1.0 + k1 * k1 + k2 * k2 + k3 * k3, e);
                a *= m;
                b *= m;
                c *= m;
            });
            break;
        }
        case MultiplierSpec::Kind::chi: {
            const double r = spec.r;
            if (!(r > 0.0)) throw DomainError("chi multiplier: r must be > 0");
            for_each_mode(F, [r](double k1, double k2, double k3, cplx& a, cplx& b, cplx& c) {
                const double kk = k1 * k1 + k2 * k2 + k3 * k3;
                const double m = kk == 0.0 ? 0.0 : std::exp(-r / kk);
                a *= m;
                b *= m;
                c *= m;
            });
            break;
        }
        case MultiplierSpec::Kind::translate: {
            const auto h = spec.shift;
            for_each_mode(F, [h](double k1, double k2, double k3, cplx& a, cplx& b, cplx& c) {
                const double phase = k1 * h[0] + k2 * h[1] + k3 * h[2];
                const cplx m(std::cos(phase), std::sin(phase));
                a *= m;
                b *= m;
                c *= m;
            });
            break;
        }
    }
}

namespace {
VectorField roundtrip_apply(const VectorField& f, const MultiplierSpec& spec) {
    SpectralField F = forward_transform(f);
    apply_multiplier(F, spec);
    return inverse_transform(F);
}
} // namespace

VectorField heat_semigroup(double t, const VectorField& f) {
    return roundtrip_apply(f, MultiplierSpec::heat(t));
}

VectorField leray_project(const VectorField& f) {
    return roundtrip_apply(f, MultiplierSpec::leray());
}

VectorField bessel_potential(double r, int sign, const VectorField& f) {
    return roundtrip_apply(f, MultiplierSpec::bessel(r, sign));
}

VectorField chi_mollify(double r, const VectorField& f) {
    return roundtrip_apply(f, MultiplierSpec::chi(r));
}

VectorField translate(const std::array<double, 3>& h, const VectorField& f) {
    return roundtrip_apply(f, MultiplierSpec::translate(h));
}

void dealias(SpectralField& F) {
    const int n = F.grid.points_per_axis;
    const int cut = n / 3;
    for (int c = 0; c < 3; ++c) {
        cplx* p = F.comp[c].data();
#pragma omp parallel for schedule(static)
        for (long idx = 0; idx < static_cast<long>(F.size()); ++idx) {
            const int i3 = static_cast<int>(idx) % n;
            const int i2 = (static_cast<int>(idx) / n) % n;
            const int i1 = static_cast<int>(idx) / (n * n);
            if (std::abs(signed_mode(i1, n)) > cut || std::abs(signed_mode(i2, n)) > cut ||
                std::abs(signed_mode(i3, n)) > cut)
                p[idx] = cplx(0.0, 0.0);
        }
    }
}

void dealias_scalar(ScalarSpectral& F) {
    const int n = F.grid.points_per_axis;
    const int cut = n / 3;
    cplx* p = F.coeff.data();
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(F.coeff.size()); ++idx) {
        const int i3 = static_cast<int>(idx) % n;
        const int i2 = (static_cast<int>(idx) / n) % n;
        const int i1 = static_cast<int>(idx) / (n * n);
        if (std::abs(signed_mode(i1, n)) > cut || std::abs(signed_mode(i2, n)) > cut ||
            std::abs(signed_mode(i3, n)) > cut)
            p[idx] = cplx(0.0, 0.0);
    }
}

SpectralField nonlinear_spectral(const SpectralField& u_hat) {
    const GridSpec& grid = u_hat.grid;
    const int n = grid.points_per_axis;
    const double l = grid.box_length;

    // physical velocity components
    std::array<std::vector<double>, 3> u;
    for (int c = 0; c < 3; ++c) {
        std::vector<cplx> data = u_hat.comp[c];
        fft3_inverse(data, n);
        u[c].resize(data.size());
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(data.size()); ++i) u[c][i] = data[i].real();
    }

    // advective product w_a = sum_j u_j d_j u_a, derivative fields streamed
    std::array<std::vector<double>, 3> w;
    for (int a = 0; a < 3; ++a) w[a].assign(grid.samples(), 0.0);
    for (int a = 0; a < 3; ++a) {
        for (int j = 0; j < 3; ++j) {
            std::vector<cplx> der = u_hat.comp[a];
#pragma omp parallel for schedule(static)
            for (long idx = 0; idx < static_cast<long>(der.size()); ++idx) {
                const int i3 = static_cast<int>(idx) % n;
                const int i2 = (static_cast<int>(idx) / n) % n;
                const int i1 = static_cast<int>(idx) / (n * n);
                const int axis_idx = j == 0 ? i1 : (j == 1 ? i2 : i3);
                const double k = wavenumber(axis_idx, n, l);
                const cplx v = der[idx];
                der[idx] = cplx(-k * v.imag(), k * v.real());
            }
            fft3_inverse(der, n);
            double* wp = w[a].data();
            const double* up = u[j].data();
#pragma omp parallel for schedule(static)
            for (long i = 0; i < static_cast<long>(der.size()); ++i)
                wp[i] += up[i] * der[i].real();
        }
    }

    SpectralField out(grid);
    const double norm = 1.0 / static_cast<double>(grid.samples());
    for (int a = 0; a < 3; ++a) {
        std::vector<cplx> data(w[a].size());
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(data.size()); ++i) data[i] = cplx(w[a][i], 0.0);
        fft3_forward(data, n);
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(data.size()); ++i) data[i] *= norm;
        out.comp[a] = std::move(data);
    }
    dealias(out);
    // zero-mean: exact for divergence-free u, enforced regardless
    for (int a = 0; a < 3; ++a) out.comp[a][0] = cplx(0.0, 0.0);
    return out;
}

NonlinearResult nonlinear_term(const VectorField& u) {
    SpectralField u_hat = forward_transform(u);
    const double defect = divergence_defect_ratio(u_hat);
    NonlinearResult res{inverse_transform(nonlinear_spectral(u_hat)), defect > 1e-6};
    return res;
}

VectorField nonlinear_term_divergence_form(const VectorField& u) {
    const GridSpec& grid = u.grid;
    const int n = grid.points_per_axis;
    const double l = grid.box_length;
    const double norm = 1.0 / static_cast<double>(grid.samples());

    SpectralField out(grid);
    for (int a = 0; a < 3; ++a) {
        // accumulate i k_j FFT(u_j u_a) over j
        std::vector<cplx> acc(grid.samples(), cplx(0.0, 0.0));
        for (int j = 0; j < 3; ++j) {
            std::vector<cplx> prod(grid.samples());
            const double* uj = u.comp[j].data();
            const double* ua = u.comp[a].data();
#pragma omp parallel for schedule(static)
            for (long i = 0; i < static_cast<long>(prod.size()); ++i)
                prod[i] = cplx(uj[i] * ua[i], 0.0);
            fft3_forward(prod, n);
#pragma omp parallel for schedule(static)
            for (long idx = 0; idx < static_cast<long>(prod.size()); ++idx) {
                const int i3 = static_cast<int>(idx) % n;
                const int i2 = (static_cast<int>(idx) / n) % n;
                const int i1 = static_cast<int>(idx) / (n * n);
                const int axis_idx = j == 0 ? i1 : (j == 1 ? i2 : i3);
                const double k = wavenumber(axis_idx, n, l);
                const cplx v = prod[idx] * norm;
                acc[idx] += cplx(-k * v.imag(), k * v.real());
            }
        }
        out.comp[a] = std::move(acc);
    }
    dealias(out);
    for (int a = 0; a < 3; ++a) out.comp[a][0] = cplx(0.0, 0.0);
    return inverse_transform(out);
}

} // namespace nsmild
