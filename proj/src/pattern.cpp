#include "hito/pattern.hpp"

#include <cstddef>

#include "hito/errors.hpp"

namespace hito {

Pattern::Pattern(Word x, Word y) : x_(std::move(x)), y_(std::move(y)) {
  if (y_.size() < 2)
    throw DegenerateHeight("pattern needs |y| >= 2 rows, got " +
                           std::to_string(y_.size()));
  period_ = compute_period();
}

bool Pattern::front_present(const SegmentId& s) const {
  const int h = height();
  if (s.orientation == Orientation::Vertical) {
    if (s.j < 0 || s.j > h - 2)
      throw RowOutOfRange("vertical row " + std::to_string(s.j) +
                          " outside 0.." + std::to_string(h - 2));
    // The first stitch of a column sits in row slot 0; slots alternate up.
    return (x_.bit_mod(s.i) ^ (s.j & 1)) != 0;
  }
  if (s.j < 0 || s.j > h - 1)
    throw RowOutOfRange("horizontal row " + std::to_string(s.j) +
                        " outside 0.." + std::to_string(h - 1));
  // The first stitch of a row spans columns 0..1; slots alternate rightward.
  return (y_.bit(s.j) ^ static_cast<int>(s.i & 1)) != 0;
}

Pattern Pattern::dual() const { return Pattern(x_.complement(), y_.complement()); }

int Pattern::compute_period() const {
  // Direct search: the whole pattern repeats every 2|x| columns (x repeats
  // every |x|, stitch parity every 2), so comparing one 2|x| window against
  // its shift decides each candidate t exactly.
  const long window = 2L * x_.size();
  const int h = height();
  for (long t = 1; t <= window; ++t) {
    bool ok = true;
    for (long i = 0; ok && i < window; ++i) {
      for (int j = 0; ok && j + 1 < h; ++j) {
        SegmentId s{Orientation::Vertical, i, j};
        SegmentId shifted{Orientation::Vertical, i + t, j};
        ok = front_present(s) == front_present(shifted);
      }
      for (int j = 0; ok && j < h; ++j) {
        SegmentId s{Orientation::Horizontal, i, j};
        SegmentId shifted{Orientation::Horizontal, i + t, j};
        ok = front_present(s) == front_present(shifted);
      }
    }
    if (ok) return static_cast<int>(t);
  }
  return static_cast<int>(window);  // t = 2|x| always qualifies
}

std::vector<SegmentId> Pattern::segments_in_period() const {
  const int h = height();
  std::vector<SegmentId> out;
  out.reserve(static_cast<std::size_t>(period_) * (2 * h - 1));
  for (long i = 0; i < period_; ++i)
    for (int j = 0; j + 1 < h; ++j)
      out.push_back({Orientation::Vertical, i, j});
  for (long i = 0; i < period_; ++i)
    for (int j = 0; j < h; ++j)
      out.push_back({Orientation::Horizontal, i, j});
  return out;
}

Pattern Pattern::parse_line(std::string_view line) {
  auto skip_ws = [&](std::size_t pos) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
      ++pos;
    return pos;
  };
  auto read_bits = [&](std::size_t pos, std::string& out) {
    while (pos < line.size() && (line[pos] == '0' || line[pos] == '1'))
      out.push_back(line[pos++]);
    return pos;
  };
  auto expect = [&](std::size_t pos, char ch) {
    if (pos >= line.size() || line[pos] != ch)
      throw ParseError("expected \"x=<bits> y=<bits>\", got \"" +
                       std::string(line) + "\"");
    return pos + 1;
  };

  std::string xs, ys;
  std::size_t pos = skip_ws(0);
  pos = expect(pos, 'x');
  pos = skip_ws(pos);
  pos = expect(pos, '=');
  pos = skip_ws(pos);
  pos = read_bits(pos, xs);
  pos = skip_ws(pos);
  pos = expect(pos, 'y');
  pos = skip_ws(pos);
  pos = expect(pos, '=');
  pos = skip_ws(pos);
  pos = read_bits(pos, ys);
  pos = skip_ws(pos);
  if (pos != line.size() || xs.empty() || ys.empty())
    throw ParseError("expected \"x=<bits> y=<bits>\", got \"" +
                     std::string(line) + "\"");
  return Pattern(Word(xs), Word(ys));
}

std::string Pattern::to_line() const {
  return "x=" + x_.str() + " y=" + y_.str();
}

}  // namespace hito
