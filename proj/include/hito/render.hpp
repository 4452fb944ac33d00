#pragma once
#include <string>

#include "hito/pattern.hpp"

namespace hito {

struct RenderOptions {
  int periods = 2;        // width of the window, in translation periods
  int gap_rows = 1;       // blank band between the front and back blocks
  double cell_size = 24;  // SVG pixels per grid cell
};

// Character-grid rendering: the front block on top, a blank band, then the
// back block in the same left-right sense (as seen in a mirror placed
// behind the strip).  Vertices are '+', horizontal stitches '-', vertical
// stitches '|', gaps spaces.  The window spans periods * P cells: vertical
// lines at columns 0..W, horizontal stitches with left column 0..W-1, rows
// printed top row first.
std::string render_ascii(const Pattern& p, const RenderOptions& opts = {});

// SVG rendering: one <line> per visible stitch, round caps, front group
// above the back group.  The root element carries data-x, data-y,
// data-label and data-period attributes.
std::string render_svg(const Pattern& p, const RenderOptions& opts = {});

}  // namespace hito
