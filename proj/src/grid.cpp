#include "nsmild/grid.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/fft.hpp"

namespace nsmild {

GridSpec::GridSpec(int m, int n, double length)
    : dimension(m), points_per_axis(n), box_length(length) {
    if (m < 3) throw DomainError("GridSpec: dimension must be >= 3");
    if (n < 8) throw DomainError("GridSpec: points_per_axis must be >= 8");
    if (n % 2 != 0) throw DomainError("GridSpec: points_per_axis must be even");
    if (!(length > 0.0)) throw DomainError("GridSpec: box_length must be positive");
    if (!Fft1d::supported_length(n))
        throw DomainError("GridSpec: points_per_axis must factor into 2, 3 and 5");
}

std::size_t GridSpec::samples() const {
    std::size_t s = 1;
    for (int a = 0; a < dimension; ++a) s *= static_cast<std::size_t>(points_per_axis);
    return s;
}

double GridSpec::cell_volume() const {
    return std::pow(spacing(), dimension);
}

} // namespace nsmild
