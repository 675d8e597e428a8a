#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/norms.hpp"
#include "nsmild/random_fields.hpp"
#include "nsmild/reference.hpp"
#include "nsmild/transforms.hpp"
#include "oracles.hpp"

using namespace nsmild;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double max_abs_diff(const VectorField& a, const VectorField& b) {
    double m = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < a.size(); ++i)
            m = std::max(m, std::abs(a.comp[c][i] - b.comp[c][i]));
    return m;
}

double max_abs(const VectorField& a) {
    double m = 0.0;
    for (int c = 0; c < 3; ++c)
        for (double v : a.comp[c]) m = std::max(m, std::abs(v));
    return m;
}
} // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(GridSpec(2, 32, kTwoPi), DomainError);
    CHECK_THROWS_AS(GridSpec(3, 6, kTwoPi), DomainError);
    CHECK_THROWS_AS(GridSpec(3, 34, kTwoPi), DomainError);  // 17 is not a 2/3/5 factor
    CHECK_THROWS_AS(GridSpec(3, 32, -1.0), DomainError);
    CHECK_NOTHROW(GridSpec(3, 48, kTwoPi));
    CHECK_NOTHROW(GridSpec(3, 40, kTwoPi));
}

TEST_CASE("forward transform: zero and single-mode fields") {
    const GridSpec grid(3, 16, kTwoPi);
    SUBCASE("zero field gives zero coefficients") {
        const SpectralField F = forward_transform(VectorField::zeros(grid));
        CHECK(F.max_modulus() == 0.0);
    }
    SUBCASE("cos(2 pi x1 / L) e1 has two coefficients of 1/2") {
        const VectorField f = single_mode_field(grid, {1, 0, 0}, {0.0, 1.0, 0.0});
        const SpectralField F = forward_transform(f);
        const int n = grid.points_per_axis;
        const std::size_t plus = static_cast<std::size_t>(1) * n * n;
        const std::size_t minus = static_cast<std::size_t>(n - 1) * n * n;
        CHECK(std::abs(F.comp[1][plus] - cplx(0.5, 0.0)) < 1e-14);
        CHECK(std::abs(F.comp[1][minus] - cplx(0.5, 0.0)) < 1e-14);
        double rest = 0.0;
        for (std::size_t i = 0; i < F.size(); ++i) {
            if (i != plus && i != minus) rest = std::max(rest, std::abs(F.comp[1][i]));
            rest = std::max(rest, std::abs(F.comp[0][i]));
            rest = std::max(rest, std::abs(F.comp[2][i]));
        }
        CHECK(rest < 1e-14);
    }
    SUBCASE("non-finite samples are rejected") {
        VectorField f = VectorField::zeros(grid);
        f.comp[0][3] = std::nan("");
        CHECK_THROWS_AS(forward_transform(f), RejectedInputError);
    }
}

TEST_CASE("transform round trip at several grid sizes") {
    for (int n : {8, 16, 32}) {
        const GridSpec grid(3, n, kTwoPi);
        const VectorField f = random_smooth_field(grid, 42 + n);
        const VectorField f2 = inverse_transform(forward_transform(f));
        CHECK(max_abs_diff(f, f2) <= 1e-12 * max_abs(f));
    }
}

TEST_CASE("fast transform agrees with the naive serial reference") {
    for (int n : {8, 12, 16}) {
        const GridSpec grid(3, n, kTwoPi);
        const VectorField f = random_smooth_field(grid, 7 * n);
        const SpectralField fast = forward_transform(f);
        const SpectralField ref = reference::forward_transform_naive(f);
        double worst = 0.0;
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < fast.size(); ++i)
                worst = std::max(worst, std::abs(fast.comp[c][i] - ref.comp[c][i]));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("inverse transform symmetry guard") {
    const GridSpec grid(3, 16, kTwoPi);
    SpectralField F = forward_transform(random_smooth_field(grid, 5));
    F.comp[0][1] += cplx(0.0, 0.5);  // break Hermitian symmetry hard
    CHECK_THROWS_AS(inverse_transform(F), SymmetryError);
}

TEST_CASE("lp norms") {
    const GridSpec grid(3, 16, kTwoPi);
    SUBCASE("zero field") {
        const VectorField z = VectorField::zeros(grid);
        for (double p : {1.0, 2.0, 3.0}) CHECK(lp_norm(z, p) == 0.0);
        CHECK(lp_norm(z, lp_infinity) == 0.0);
    }
    SUBCASE("constant field, p = 2") {
        VectorField f = VectorField::zeros(grid);
        for (auto& v : f.comp[0]) v = 3.0;
        const double expected = 3.0 * std::pow(kTwoPi, 1.5);
        CHECK(lp_norm(f, 2.0) == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("Gaussian bump L1 mass against the closed form") {
        const GridSpec g32(3, 32, kTwoPi);
        const double sigma = kTwoPi / 16.0;
        VectorField f = VectorField::zeros(g32);
        f.comp[0] = gaussian_bump(g32, {kTwoPi / 2, kTwoPi / 2, kTwoPi / 2}, sigma, 1.7);
        const double expected = oracles::gaussian_l1_mass(sigma, 1.7);
        CHECK(lp_norm(f, 1.0) == doctest::Approx(expected).epsilon(1e-6));
    }
    SUBCASE("p < 1 rejected") {
        CHECK_THROWS_AS(lp_norm(VectorField::zeros(grid), 0.5), DomainError);
    }
    SUBCASE("absolute homogeneity") {
        VectorField f = random_smooth_field(grid, 9);
        VectorField g = f;
        scale(g, -2.5);
        for (double p : {1.0, 2.0, 3.0})
            CHECK(lp_norm(g, p) == doctest::Approx(2.5 * lp_norm(f, p)).epsilon(1e-12));
    }
    SUBCASE("matches the serial reference") {
        const VectorField f = random_smooth_field(grid, 10);
        for (double p : {1.0, 2.0, 3.0})
            CHECK(lp_norm(f, p) == doctest::Approx(reference::lp_norm_serial(f, p)).epsilon(1e-13));
    }
}

TEST_CASE("Parseval and Holder inequalities on random fields") {
    const GridSpec grid(3, 16, kTwoPi);
    for (int seed = 1; seed <= 100; ++seed) {
        const VectorField f = random_smooth_field(grid, seed);
        const double l2p = l2_norm(f);
        const double l2s = l2_norm_spectral(forward_transform(f));
        CHECK(std::abs(l2p - l2s) <= 1e-10 * l2p);
    }
    // grid Holder inequality |(f.g)|_1 <= |f|_p |g|_p'
    for (int seed = 1; seed <= 100; ++seed) {
        const VectorField f = random_smooth_field(grid, seed);
        const VectorField g = random_smooth_field(grid, seed + 7777);
        VectorField dot = VectorField::zeros(grid);
        for (std::size_t i = 0; i < f.size(); ++i)
            dot.comp[0][i] = f.comp[0][i] * g.comp[0][i] + f.comp[1][i] * g.comp[1][i] +
                             f.comp[2][i] * g.comp[2][i];
        for (double p : {2.0, 3.0, 1.5}) {
            const double q = p / (p - 1.0);
            CHECK(lp_norm(dot, 1.0) <= lp_norm(f, p) * lp_norm(g, q) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("spectral divergence") {
    const GridSpec grid(3, 16, kTwoPi);
    SUBCASE("gradient field maps to -|k|^2 p") {
        // p single mode: grad p has divergence -|k|^2 p
        SpectralField F(grid);
        ScalarSpectral p(grid);
        const int n = grid.points_per_axis;
        const std::size_t idx = (static_cast<std::size_t>(1) * n + 2) * n + 1;  // mode (1,2,1)
        const std::size_t cidx = (static_cast<std::size_t>(n - 1) * n + (n - 2)) * n + (n - 1);
        p.coeff[idx] = cplx(0.3, -0.1);
        p.coeff[cidx] = std::conj(p.coeff[idx]);
        const SpectralField grad = spectral_gradient(p);
        const ScalarSpectral div = spectral_divergence(grad);
        const double k2 = 1.0 + 4.0 + 1.0;
        CHECK(std::abs(div.coeff[idx] - (-k2) * p.coeff[idx]) < 1e-13);
        CHECK(std::abs(div.coeff[cidx] - (-k2) * p.coeff[cidx]) < 1e-13);
    }
    SUBCASE("single transverse mode is divergence-free") {
        const VectorField f = single_mode_field(grid, {1, 2, 0}, {2.0, -1.0, 0.0});
        CHECK(is_divergence_free(f));
    }
    SUBCASE("random field matches the finite-difference reference to O(h^2)") {
        const VectorField f = random_smooth_field(grid, 21, 2.0);
        const std::vector<double> spect =
            inverse_transform_scalar(spectral_divergence(forward_transform(f)));
        const std::vector<double> fd = reference::finite_difference_divergence(f);
        double worst16 = 0.0;
        for (std::size_t i = 0; i < spect.size(); ++i)
            worst16 = std::max(worst16, std::abs(spect[i] - fd[i]));

        const GridSpec g2(3, 32, kTwoPi);
        const VectorField f2 = random_smooth_field(g2, 21, 2.0);
        const std::vector<double> spect2 =
            inverse_transform_scalar(spectral_divergence(forward_transform(f2)));
        const std::vector<double> fd2 = reference::finite_difference_divergence(f2);
        double worst32 = 0.0;
        for (std::size_t i = 0; i < spect2.size(); ++i)
            worst32 = std::max(worst32, std::abs(spect2[i] - fd2[i]));
        // second-order: halving h shrinks the defect by ~4
        CHECK(worst32 < worst16 / 2.5);
    }
}

TEST_CASE("central half-box mass fraction") {
    const GridSpec grid(3, 32, kTwoPi);
    VectorField f = VectorField::zeros(grid);
    f.comp[0] = gaussian_bump(grid, {kTwoPi / 2, kTwoPi / 2, kTwoPi / 2}, kTwoPi / 20.0, 1.0);
    CHECK(central_halfbox_mass_fraction(f) > 0.999);
    const VectorField tg = taylor_green(grid);
    CHECK(central_halfbox_mass_fraction(tg) < 0.9);
}
