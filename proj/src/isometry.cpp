#include "hito/isometry.hpp"

#include <sstream>

namespace hito {

std::pair<SegmentId, Side> apply(const Isometry& g, const SegmentId& s,
                                 Side side, int h) {
  SegmentId r = s;
  if (s.orientation == Orientation::Vertical) {
    r.i = g.su > 0 ? s.i + g.off : g.off - s.i;
    if (g.sv < 0) r.j = h - 2 - s.j;
  } else {
    r.i = g.su > 0 ? s.i + g.off : g.off - s.i - 1;
    if (g.sv < 0) r.j = h - 1 - s.j;
  }
  Side out = side;
  if (g.sz < 0) out = side == Side::Front ? Side::Back : Side::Front;
  return {r, out};
}

Isometry compose(const Isometry& g1, const Isometry& g2) {
  return {g1.su * g2.su, g1.sv * g2.sv, g1.sz * g2.sz,
          g1.su > 0 ? g1.off + g2.off : g1.off - g2.off};
}

Isometry inverse(const Isometry& g) {
  return {g.su, g.sv, g.sz, g.su > 0 ? -g.off : g.off};
}

bool is_symmetry(const Pattern& p, const Isometry& g) {
  const int h = p.height();
  const int period = p.translation_period();
  for (long i = 0; i < period; ++i) {
    for (int j = 0; j + 1 < h; ++j) {
      SegmentId s{Orientation::Vertical, i, j};
      for (Side side : {Side::Front, Side::Back}) {
        auto [img, img_side] = apply(g, s, side, h);
        if (p.present(s, side) != p.present(img, img_side)) return false;
      }
    }
    for (int j = 0; j < h; ++j) {
      SegmentId s{Orientation::Horizontal, i, j};
      for (Side side : {Side::Front, Side::Back}) {
        auto [img, img_side] = apply(g, s, side, h);
        if (p.present(s, side) != p.present(img, img_side)) return false;
      }
    }
  }
  return true;
}

namespace {

std::string column_text(long off) {
  std::ostringstream os;
  if (off % 2 == 0)
    os << off / 2;
  else
    os << off / 2.0;
  return os.str();
}

}  // namespace

std::string describe(const Isometry& g) {
  std::ostringstream os;
  if (g.su > 0) {
    if (g.sv > 0 && g.sz > 0) {
      if (g.off == 0)
        os << "identity";
      else
        os << "translation by " << g.off;
    } else if (g.sv < 0 && g.sz > 0) {
      if (g.off == 0)
        os << "mirror ⊥ b";
      else
        os << "glide reflection ⊥ b (shift " << g.off << ")";
    } else if (g.sv > 0 && g.sz < 0) {
      if (g.off == 0)
        os << "reflection across the strip plane";
      else
        os << "glide reflection across the strip plane (shift " << g.off
           << ")";
    } else {
      if (g.off == 0)
        os << "rotation 2 about a";
      else
        os << "screw rotation about a (shift " << g.off << ")";
    }
  } else {
    if (g.sv > 0 && g.sz > 0)
      os << "mirror ⊥ a at column " << column_text(g.off);
    else if (g.sv > 0 && g.sz < 0)
      os << "rotation 2 about b at column " << column_text(g.off);
    else if (g.sv < 0 && g.sz > 0)
      os << "rotation 2 about c at column " << column_text(g.off);
    else
      os << "roto-reflection ~2 at column " << column_text(g.off);
  }
  return os.str();
}

}  // namespace hito
