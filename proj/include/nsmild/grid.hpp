#pragma once

#include <cstddef>

namespace nsmild {

// Uniform periodic grid on a box of side L approximating R^m.  Grid-based
// modules run at m = 3; the scalar kernel code is parametric in m and does
// not use this type.  Wavenumbers are k = 2*pi*n/L with integer n per axis
// in [-N/2, N/2).
struct GridSpec {
    int dimension;        // m
    int points_per_axis;  // N, even, >= 8, factors limited to {2,3,5}
    double box_length;    // L

    GridSpec(int m, int n, double length);

    double spacing() const { return box_length / points_per_axis; }
    std::size_t samples() const;  // N^m
    double cell_volume() const;   // (L/N)^m

    bool operator==(const GridSpec&) const = default;
};

// Signed lattice index for storage slot idx in [0, N): 0..N/2-1 map to
// themselves, N/2..N-1 map to idx - N (so N/2 is the -N/2 mode).
inline int signed_mode(int idx, int n) { return idx < n / 2 ? idx : idx - n; }

inline int storage_index(int mode, int n) { return mode >= 0 ? mode : mode + n; }

} // namespace nsmild
