#pragma once

// Static SVG rendering of the lattice paths behind Christoffel words:
// 'a' is one step right, 'b' one step up, origin at the bottom left.

#include <string>

#include "sturmkit/christoffel.hpp"

namespace sturmkit::render {

enum class path_side { lower, upper, both };

struct render_spec {
    christoffel::slope_pair slope;
    path_side side = path_side::lower;
    int cell_size = 24;          // pixels per unit step
    bool include_segment = true; // straight segment from (0,0) to (p,q)
};

// Deterministic byte output: fixed attribute order, integer coordinates
// only, no timestamps.
std::string render_svg(const render_spec& spec);

}  // namespace sturmkit::render
