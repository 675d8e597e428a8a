#pragma once

#include <cstdint>
#include <random>

#include "nsmild/field.hpp"

namespace nsmild {

// Deterministic random stream.  Uniform/normal mappings are hand-rolled so
// identical seeds give identical fields on any standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform();                      // [0,1)
    double uniform(double lo, double hi);
    double normal();                       // Box-Muller, no cached spare
private:
    std::mt19937_64 eng_;
};

// Random real field with spectrum ~ e^{-(|n|/n0)^2}, mean-free, unit L2 norm.
// n0 defaults to N/8 so fields stay well resolved.
VectorField random_smooth_field(const GridSpec& grid, std::uint64_t seed, double n0 = 0.0);

// Leray projection of a random smooth field; exactly divergence-free in the
// spectral representation.
VectorField random_divergence_free_field(const GridSpec& grid, std::uint64_t seed, double n0 = 0.0);

// Scalar Gaussian bump c exp(-|x-center|^2 / (2 sigma^2)) sampled on the grid.
std::vector<double> gaussian_bump(const GridSpec& grid, const std::array<double, 3>& center,
                                  double sigma, double amplitude);

// Vector field with Gaussian-bump components around 'center' (analytic
// envelope; decays well inside the box when sigma << L).
VectorField gaussian_envelope_field(const GridSpec& grid, std::uint64_t seed,
                                    const std::array<double, 3>& center, double sigma);

// Divergence-free localized field: spectral curl of a random Gaussian-bump
// vector potential placed near 'center'.
VectorField localized_divergence_free_field(const GridSpec& grid, std::uint64_t seed,
                                            const std::array<double, 3>& center, double sigma);

// Taylor-Green vortex (sin x1 cos x2 cos x3, -cos x1 sin x2 cos x3, 0),
// rescaled to the requested L2 norm.
VectorField taylor_green(const GridSpec& grid, double l2_norm_target = 1.0);

// Single divergence-free cosine mode: a cos(k.x) with k.a = 0.
VectorField single_mode_field(const GridSpec& grid, const std::array<int, 3>& mode,
                              const std::array<double, 3>& amplitude);

} // namespace nsmild
