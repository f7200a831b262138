#pragma once

#include "fsw/curves.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsw {

struct Window {
    double xmin, xmax, ymin, ymax;
};

// Standalone SVG of the given curves on an equal-scale viewport with 5%
// margins.  Without an explicit window, the bounding box of all points is
// used.  Curve labels become hover titles and a legend.
std::string render_svg(const std::vector<Polyline>& curves,
                       const std::optional<Window>& window = std::nullopt);

} // namespace fsw
