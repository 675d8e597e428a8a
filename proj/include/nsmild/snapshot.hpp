#pragma once

#include <string>

#include "nsmild/field.hpp"

namespace nsmild {

// Snapshot format: one text header line
//   NSMILD1 <m> <N> <L>
// followed by m*N^m little-endian float64 samples, components concatenated,
// row-major within each component.
void save_snapshot(const std::string& path, const VectorField& f);
VectorField load_snapshot(const std::string& path);

} // namespace nsmild
