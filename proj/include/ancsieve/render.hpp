#pragma once

#include <string>
#include <vector>

#include "ancsieve/annulus.hpp"

namespace ancsieve {

struct RenderSpec {
    int n = 1;
    int m = 1;
    Permutation perm = Permutation::identity(2);
    /// Width and height of the square canvas in pixels.
    int size = 400;
    double stroke_width = 1.5;
    int font_size = 12;
    /// Render without complaint even if perm is not connected annular
    /// noncrossing.
    bool force = false;
};

struct RenderResult {
    std::string svg;
    std::vector<std::string> warnings;
};

/// SVG 1.1 drawing of the annulus: exterior labels clockwise from 12
/// o'clock, interior labels counter-clockwise, one arrow per step x -> perm(x)
/// and one <g class="cycle"> per cycle. Output depends only on the spec.
RenderResult render_svg(const RenderSpec& spec);

}  // namespace ancsieve
