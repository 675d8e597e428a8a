#include "nsmild/snapshot.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "nsmild/errors.hpp"

namespace nsmild {

static_assert(std::endian::native == std::endian::little,
              "snapshot format is little-endian; big-endian hosts need byte swaps");

void save_snapshot(const std::string& path, const VectorField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_snapshot: cannot open " + path);
    char header[128];
    std::snprintf(header, sizeof(header), "NSMILD1 %d %d %.17g\n", f.grid.dimension,
                  f.grid.points_per_axis, f.grid.box_length);
    out.write(header, static_cast<std::streamsize>(std::strlen(header)));
    for (int c = 0; c < 3; ++c)
        out.write(reinterpret_cast<const char*>(f.comp[c].data()),
                  static_cast<std::streamsize>(f.comp[c].size() * sizeof(double)));
    if (!out) throw std::runtime_error("save_snapshot: write failed for " + path);
}

VectorField load_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_snapshot: cannot open " + path);
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    std::string magic;
    int m = 0, n = 0;
    double l = 0.0;
    hs >> magic >> m >> n >> l;
    if (magic != "NSMILD1" || !hs)
        throw RejectedInputError("load_snapshot: bad header in " + path);
    GridSpec grid(m, n, l);
    VectorField f(grid);
    for (int c = 0; c < 3; ++c) {
        in.read(reinterpret_cast<char*>(f.comp[c].data()),
                static_cast<std::streamsize>(f.comp[c].size() * sizeof(double)));
        if (!in) throw RejectedInputError("load_snapshot: truncated data in " + path);
    }
    return f;
}

} // namespace nsmild
