#pragma once
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hito/pattern.hpp"
#include "hito/word.hpp"

// Test-side oracles and fixtures, deliberately written straight from the
// definitions and independent of the library's own shortcuts.
namespace testutil {

// Least t > 0 that translates the front onto itself (the back is the
// complement, so front agreement is the whole story).  Checks a window of
// columns wide enough to cover any alignment of the period-2|x| pattern.
inline int oracle_period(const hito::Pattern& p) {
  using hito::Orientation;
  const int h = p.height();
  const long n = p.x().size();
  for (int t = 1; t <= 2 * n; ++t) {
    bool ok = true;
    for (long i = -2 * n; ok && i < 2 * n; ++i) {
      for (int j = 0; ok && j + 1 < h; ++j)
        if (p.front_present({Orientation::Vertical, i, j}) !=
            p.front_present({Orientation::Vertical, i + t, j}))
          ok = false;
      for (int j = 0; ok && j < h; ++j)
        if (p.front_present({Orientation::Horizontal, i, j}) !=
            p.front_present({Orientation::Horizontal, i + t, j}))
          ok = false;
    }
    if (ok) return t;
  }
  return static_cast<int>(2 * n);
}

inline hito::Word random_word(std::mt19937_64& rng, int len) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
  return hito::Word::from_bits(std::move(bits));
}

// The two character grids of an ASCII rendering, top row first.
struct AsciiBlocks {
  std::vector<std::string> front, back;
};

inline AsciiBlocks split_ascii(const std::string& art, int h) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : art) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  // grid rows are full-width (possibly all spaces); the gap rows are empty
  std::vector<std::string> rows;
  for (const std::string& l : lines)
    if (!l.empty()) rows.push_back(l);
  AsciiBlocks b;
  const std::size_t n = static_cast<std::size_t>(2 * h - 1);
  if (rows.size() != 2 * n) return b;  // caller asserts on emptiness
  b.front.assign(rows.begin(), rows.begin() + static_cast<long>(n));
  b.back.assign(rows.begin() + static_cast<long>(n), rows.end());
  return b;
}

// Glyph of the vertical slot (i, j) in a block (row j spans grid rows j,j+1).
inline char vert_glyph(const std::vector<std::string>& g, int h, long i,
                       int j) {
  return g[static_cast<std::size_t>(2 * (h - 1 - j) - 1)]
          [static_cast<std::size_t>(2 * i)];
}

// Glyph of the horizontal slot with left column i on row j.
inline char horiz_glyph(const std::vector<std::string>& g, int h, long i,
                        int j) {
  return g[static_cast<std::size_t>(2 * (h - 1 - j))]
          [static_cast<std::size_t>(2 * i + 1)];
}

}  // namespace testutil
