#include "gpc/plot.hpp"

#include <sstream>
#include <stdexcept>

#include "gpc/channel.hpp"

namespace gpc {

TetraSlice classify_tetra_slice(double lambda3, int resolution) {
    if (resolution < 8) throw std::invalid_argument("classify_tetra_slice: resolution must be >= 8");
    TetraSlice slice;
    slice.lambda3 = lambda3;
    slice.resolution = resolution;
    slice.cp.assign(static_cast<std::size_t>(resolution) * resolution, false);
    const double step = (slice.hi - slice.lo) / resolution;
    for (int row = 0; row < resolution; ++row) {
        const double l2 = slice.hi - (row + 0.5) * step;
        for (int col = 0; col < resolution; ++col) {
            const double l1 = slice.lo + (col + 0.5) * step;
            const bool cp = cp_condition_qubit({l1, l2, lambda3});
            slice.cp[static_cast<std::size_t>(row) * resolution + col] = cp;
            if (cp) ++slice.cp_count;
        }
    }
    return slice;
}

std::string tetra_slice_svg(const TetraSlice& slice) {
    const int res = slice.resolution;
    const int cell = 8;
    const int size = res * cell;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
        << "\" fill=\"#f4f4f4\"/>\n";
    for (int row = 0; row < res; ++row)
        for (int col = 0; col < res; ++col)
            if (slice.cp[static_cast<std::size_t>(row) * res + col])
                svg << "<rect x=\"" << col * cell << "\" y=\"" << row * cell << "\" width=\"" << cell
                    << "\" height=\"" << cell << "\" fill=\"#4878a8\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace gpc
