#pragma once
#include <string>
#include <utility>

#include "hito/pattern.hpp"

namespace hito {

// A candidate symmetry of a two-sided frieze, stored as finite data.
//
// Axes: a runs along the strip, b runs across it in the plane of the cloth,
// c is perpendicular to the cloth.  An isometry that maps the strip onto
// itself factors into independent actions on the three coordinates:
//
//   u (columns): u -> su*u + off.  With su=+1 this is a translation by
//     t = off columns; with su=-1 a reflection about the vertical axis at
//     column c = off/2 (half-integer anchors are allowed and land on cell
//     centres).
//   v (rows): kept fixed (sv=+1) or flipped about the strip's horizontal
//     midline (sv=-1); the flip is forced to the midline, so it carries no
//     parameter.
//   side: kept (sz=+1) or swapped front-to-back (sz=-1).
struct Isometry {
  int su = +1;
  int sv = +1;
  int sz = +1;
  long off = 0;

  // The spec-facing shift value: the translation amount t when su=+1, the
  // anchor column c (possibly half-integer) when su=-1.
  double shift() const { return su > 0 ? static_cast<double>(off) : off / 2.0; }

  static Isometry identity() { return {}; }
  static Isometry translation(long t) { return {+1, +1, +1, t}; }

  friend bool operator==(const Isometry&, const Isometry&) = default;
};

// Image of a segment slot (and side) under g, for a pattern of height h.
// Row maps under sv=-1: vertical j -> h-2-j, horizontal j -> h-1-j.
// Horizontal left-column maps: i -> i + off (su=+1), i -> off - i - 1
// (su=-1, the reflected image of the span [i, i+1]).
std::pair<SegmentId, Side> apply(const Isometry& g, const SegmentId& s,
                                 Side side, int h);

// g1 after g2.  Column offsets compose as off = su1*off2 + off1.
Isometry compose(const Isometry& g1, const Isometry& g2);

Isometry inverse(const Isometry& g);

// Ground-truth symmetry test: g is a symmetry iff every slot in one
// translation period, on both sides, has the same stitch visibility as its
// image.  Works for any shift value; checking one period suffices because
// both the pattern and the matching condition repeat every period.
bool is_symmetry(const Pattern& p, const Isometry& g);

// Human-readable description, e.g. "mirror ⊥ a at column 1.5".
std::string describe(const Isometry& g);

}  // namespace hito
