#ifndef REINHARDT_SVG_HPP
#define REINHARDT_SVG_HPP

#include <array>
#include <string>
#include <vector>

namespace reinhardt {

struct SvgOptions {
    double width = 640.0;
    double height = 640.0;
    bool hexagram_overlay = false;  // the two guide triangles confining every boundary
};

// Render polylines (one per boundary branch) into an SVG document. Y axis is
// flipped to the usual mathematical orientation. Polylines only, no curves.
std::string svg_curves(const std::vector<std::vector<std::array<double, 2>>>& branches,
                       const SvgOptions& opt = {});

}  // namespace reinhardt

#endif
