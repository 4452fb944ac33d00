#include "hito/render.hpp"

#include <sstream>

#include "hito/classify.hpp"

namespace hito {

namespace {

// One block of character art; rows are returned top row first.
std::vector<std::string> ascii_block(const Pattern& p, long width, Side side) {
  const int h = p.height();
  const long cols = 2 * width + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(2 * h - 1),
                                std::string(static_cast<std::size_t>(cols), ' '));
  auto at = [](std::vector<std::string>& g, int row_from_top,
               long col) -> char& {
    return g[static_cast<std::size_t>(row_from_top)]
            [static_cast<std::size_t>(col)];
  };
  for (int j = 0; j < h; ++j) {
    int top = 2 * (h - 1 - j);  // grid row j prints this far from the top
    for (long i = 0; i <= width; ++i) at(grid, top, 2 * i) = '+';
    for (long i = 0; i < width; ++i)
      if (p.present({Orientation::Horizontal, i, j}, side))
        at(grid, top, 2 * i + 1) = '-';
  }
  for (int j = 0; j + 1 < h; ++j) {
    int top = 2 * (h - 1 - j) - 1;  // between rows j and j+1
    for (long i = 0; i <= width; ++i)
      if (p.present({Orientation::Vertical, i, j}, side))
        at(grid, top, 2 * i) = '|';
  }
  return grid;
}

}  // namespace

std::string render_ascii(const Pattern& p, const RenderOptions& opts) {
  const long width = static_cast<long>(opts.periods) * p.translation_period();
  std::ostringstream os;
  for (const std::string& row : ascii_block(p, width, Side::Front))
    os << row << '\n';
  for (int k = 0; k < opts.gap_rows; ++k) os << '\n';
  for (const std::string& row : ascii_block(p, width, Side::Back))
    os << row << '\n';
  return os.str();
}

namespace {

void svg_block(std::ostringstream& os, const Pattern& p, long width,
               Side side, double cell, const char* name) {
  const int h = p.height();
  os << "  <g class=\"" << name << "\" fill=\"none\" stroke=\"currentColor\""
     << " stroke-width=\"" << cell * 0.18 << "\" stroke-linecap=\"round\">\n";
  auto row_y = [&](int j) { return (h - 1 - j) * cell; };
  for (long i = 0; i <= width; ++i)
    for (int j = 0; j + 1 < h; ++j)
      if (p.present({Orientation::Vertical, i, j}, side))
        os << "    <line x1=\"" << i * cell << "\" y1=\"" << row_y(j + 1)
           << "\" x2=\"" << i * cell << "\" y2=\"" << row_y(j) << "\"/>\n";
  for (long i = 0; i < width; ++i)
    for (int j = 0; j < h; ++j)
      if (p.present({Orientation::Horizontal, i, j}, side))
        os << "    <line x1=\"" << i * cell << "\" y1=\"" << row_y(j)
           << "\" x2=\"" << (i + 1) * cell << "\" y2=\"" << row_y(j)
           << "\"/>\n";
  os << "  </g>\n";
}

}  // namespace

std::string render_svg(const Pattern& p, const RenderOptions& opts) {
  const long width = static_cast<long>(opts.periods) * p.translation_period();
  const double cell = opts.cell_size;
  const int h = p.height();
  const double block_h = (h - 1) * cell;
  const double margin = cell;
  const double gap = opts.gap_rows * cell;
  const double total_w = width * cell + 2 * margin;
  const double total_h = 2 * block_h + gap + 2 * margin;
  const std::string label = classify(p).label;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w
     << "\" height=\"" << total_h << "\" viewBox=\"0 0 " << total_w << ' '
     << total_h << "\" data-x=\"" << p.x().str() << "\" data-y=\""
     << p.y().str() << "\" data-label=\"" << label << "\" data-period=\""
     << p.translation_period() << "\">\n";
  os << "<g transform=\"translate(" << margin << ',' << margin << ")\">\n";
  svg_block(os, p, width, Side::Front, cell, "front");
  os << "</g>\n";
  os << "<g transform=\"translate(" << margin << ','
     << margin + block_h + gap << ")\">\n";
  svg_block(os, p, width, Side::Back, cell, "back");
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace hito
