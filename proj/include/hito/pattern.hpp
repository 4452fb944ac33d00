#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "hito/word.hpp"

namespace hito {

enum class Orientation { Vertical, Horizontal };
enum class Side { Front, Back };

// One unit stitch slot on the grid.
//
// Vertical: column i, spanning rows j and j+1; valid j is 0 .. h-2.
// Horizontal: row j, spanning columns i and i+1 (i is the left column);
// valid j is 0 .. h-1.  The column index i is unbounded: the pattern repeats
// horizontally.  Rows are numbered from the bottom.
struct SegmentId {
  Orientation orientation;
  long i;
  int j;

  friend bool operator==(const SegmentId&, const SegmentId&) = default;
};

// A two-sided hitomezashi frieze: a strip of cloth |y| rows tall, extended
// periodically along the horizontal axis, with running stitches on every
// grid line.  The vertical word x is used periodically across columns; the
// horizontal word y is finite, one bit per row.  The back of the cloth is
// the exact complement of the front: a stitch shows on exactly one side of
// every slot.
class Pattern {
 public:
  // Throws DegenerateHeight if |y| < 2.
  Pattern(Word x, Word y);

  const Word& x() const { return x_; }
  const Word& y() const { return y_; }

  // Number of rows of horizontal stitching, h = |y|.
  int height() const { return y_.size(); }

  // Stitch visibility on the front.  Any integer i is accepted; throws
  // RowOutOfRange if j is outside the orientation's row range.
  bool front_present(const SegmentId& s) const;
  bool back_present(const SegmentId& s) const { return !front_present(s); }
  bool present(const SegmentId& s, Side side) const {
    return side == Side::Front ? front_present(s) : back_present(s);
  }

  // The pattern stitched with both first-stitch words complemented; its
  // front reproduces this pattern's back.
  Pattern dual() const;

  // The least t > 0 such that translating by t columns maps the pattern
  // onto itself on both sides.  Always even (an odd shift flips the stitch
  // parity of every row) and always a divisor of 2|x|.
  int translation_period() const { return period_; }

  // Every segment slot with 0 <= i < translation_period(): a fundamental
  // domain of the translation symmetry.  Vertical slots first.
  std::vector<SegmentId> segments_in_period() const;

  // Parses one "x=<bits> y=<bits>" line (whitespace tolerant).
  static Pattern parse_line(std::string_view line);
  std::string to_line() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  int compute_period() const;

  Word x_;
  Word y_;
  int period_;
};

}  // namespace hito
