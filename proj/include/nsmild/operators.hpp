#pragma once

#include <array>

#include "nsmild/field.hpp"

namespace nsmild {

// Fourier multiplier family used throughout: heat semigroup e^{tD}, Leray
// projector, Bessel potentials (1-D)^{+-r/2}, the chi_r spectral cutoff
// e^{-r/|k|^2} (zero at k = 0), and translation phases.
struct MultiplierSpec {
    enum class Kind { heat, leray, bessel, chi, translate };
    Kind kind;
    double t = 0.0;                       // heat
    double r = 0.0;                       // bessel / chi
    int sign = +1;                        // bessel exponent sign
    std::array<double, 3> shift{0, 0, 0}; // translate

    static MultiplierSpec heat(double t);
    static MultiplierSpec leray();
    static MultiplierSpec bessel(double r, int sign);
    static MultiplierSpec chi(double r);
    static MultiplierSpec translate(const std::array<double, 3>& h);
};

void apply_multiplier(SpectralField& F, const MultiplierSpec& spec);

// VectorField-level operations (transform, multiply, transform back).
VectorField heat_semigroup(double t, const VectorField& f);
VectorField leray_project(const VectorField& f);
VectorField bessel_potential(double r, int sign, const VectorField& f);
VectorField chi_mollify(double r, const VectorField& f);
VectorField translate(const std::array<double, 3>& h, const VectorField& f);

// Zero all modes with any |n_i| > N/3 (2/3 rule).
void dealias(SpectralField& F);
void dealias_scalar(ScalarSpectral& F);

// u . grad u evaluated pseudo-spectrally on the dealiased product.  The
// divergence warning is raised when the input divergence defect exceeds
// 1e-6, where the advective and divergence forms stop agreeing.
struct NonlinearResult {
    VectorField field;
    bool divergence_warning = false;
};
NonlinearResult nonlinear_term(const VectorField& u);

// sum_k d/dx_k (u_k u_a), the divergence form; equals the advective form for
// divergence-free u.
VectorField nonlinear_term_divergence_form(const VectorField& u);

// Spectral-in / spectral-out core used by the solver: dealiased transform of
// u . grad u, without projection.
SpectralField nonlinear_spectral(const SpectralField& u_hat);

} // namespace nsmild
