#ifndef GPC_PLOT_HPP
#define GPC_PLOT_HPP

#include <string>
#include <vector>

namespace gpc {

/// A (lambda_1, lambda_2) slice of the qubit CP region at fixed lambda_3,
/// classified on a resolution x resolution grid of cell centers over
/// [-1.5, 1.5]^2.
struct TetraSlice {
    double lambda3 = 0.0;
    int resolution = 0;
    double lo = -1.5;
    double hi = 1.5;
    std::vector<bool> cp;  // row-major, row 0 at lambda_2 = hi (top of image)
    int cp_count = 0;
};

TetraSlice classify_tetra_slice(double lambda3, int resolution);

/// Static SVG raster of a slice: one rect per CP cell over a plain background.
std::string tetra_slice_svg(const TetraSlice& slice);

}  // namespace gpc

#endif
