#include "sturmkit/render.hpp"

#include <stdexcept>

#include "sturmkit/word.hpp"

namespace sturmkit::render {

namespace {

void append_path(std::string& svg, const word& w, std::int64_t q, std::int64_t cell,
                 std::int64_t margin, const char* color) {
    const auto sx = [&](std::int64_t x) { return std::to_string(margin + x * cell); };
    const auto sy = [&](std::int64_t y) { return std::to_string(margin + (q - y) * cell); };
    std::string points = sx(0) + "," + sy(0);
    std::int64_t x = 0, y = 0;
    for (letter l : w) {
        if (l == letter::a)
            ++x;
        else
            ++y;
        points += " " + sx(x) + "," + sy(y);
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
}

}  // namespace

std::string render_svg(const render_spec& spec) {
    if (spec.cell_size < 1) throw std::invalid_argument("render: cell size must be positive");
    const std::int64_t p = spec.slope.p, q = spec.slope.q;
    const std::int64_t cell = spec.cell_size;
    const word lo = christoffel::lower(spec.slope);  // validates the slope

    const std::int64_t margin = cell;
    const std::int64_t width = p * cell + 2 * margin;
    const std::int64_t height = q * cell + 2 * margin;
    const auto sx = [&](std::int64_t x) { return std::to_string(margin + x * cell); };
    const auto sy = [&](std::int64_t y) { return std::to_string(margin + (q - y) * cell); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";

    // Unit grid.
    for (std::int64_t x = 0; x <= p; ++x)
        svg += "<line x1=\"" + sx(x) + "\" y1=\"" + sy(0) + "\" x2=\"" + sx(x) + "\" y2=\"" +
               sy(q) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (std::int64_t y = 0; y <= q; ++y)
        svg += "<line x1=\"" + sx(0) + "\" y1=\"" + sy(y) + "\" x2=\"" + sx(p) + "\" y2=\"" +
               sy(y) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

    if (spec.include_segment)
        svg += "<line x1=\"" + sx(0) + "\" y1=\"" + sy(0) + "\" x2=\"" + sx(p) + "\" y2=\"" +
               sy(q) + "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    if (spec.side == path_side::lower || spec.side == path_side::both)
        append_path(svg, lo, q, cell, margin, "#1f77b4");
    if (spec.side == path_side::upper || spec.side == path_side::both)
        append_path(svg, christoffel::upper(spec.slope), q, cell, margin, "#d62728");

    svg += "</svg>\n";
    return svg;
}

}  // namespace sturmkit::render
