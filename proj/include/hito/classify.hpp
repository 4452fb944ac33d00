#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hito/isometry.hpp"
#include "hito/pattern.hpp"

namespace hito {

// Symmetry symbols a two-sided frieze group can carry on an axis:
//   m    reflection in the plane perpendicular to the axis
//   a    the same reflection combined with a half-period glide
//   2    180-degree rotation about the axis
//   2'   the rotation combined with a half-period screw (written 2')
//   ~2   180-degree rotation about c combined with reflection in the plane
//        of the strip (roto-reflection, written ~2; axis c only)
enum class Symbol : std::uint8_t {
  Mirror = 1,
  Glide = 2,
  Rot2 = 4,
  Screw = 8,
  RotoRefl = 16,
};

// A small set of Symbols.
class AxisSet {
 public:
  constexpr AxisSet() = default;
  constexpr AxisSet(std::initializer_list<Symbol> syms) {
    for (Symbol s : syms) add(s);
  }

  constexpr void add(Symbol s) { bits_ |= static_cast<std::uint8_t>(s); }
  constexpr bool has(Symbol s) const {
    return (bits_ & static_cast<std::uint8_t>(s)) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const {
    int n = 0;
    for (std::uint8_t b = bits_; b; b &= b - 1) ++n;
    return n;
  }

  friend constexpr bool operator==(const AxisSet&, const AxisSet&) = default;
  friend constexpr bool operator<(const AxisSet& p, const AxisSet& q) {
    return p.bits_ < q.bits_;
  }

 private:
  std::uint8_t bits_ = 0;
};

const char* symbol_text(Symbol s);  // "m", "a", "2", "2'", "~2"

// The symmetry content of a pattern, as found by the geometric oracle.
//
// `content_*` lists every symbol with a witnessing isometry, including ones
// a group label leaves implicit (for example, a screw about a combined with
// a mirror perpendicular to a forces a roto-reflection; the label shows only
// the stacked pair on axis a).  `axis_*` are the symbol sets the catalogue
// label displays.  `anchors` maps "axis:symbol" keys (e.g. "a:m", "c:~2")
// to the first witnessing isometry found, for every content symbol.
struct Signature {
  AxisSet axis_a, axis_b, axis_c;           // displayed by the label
  AxisSet content_a, content_b, content_c;  // full detected content
  std::map<std::string, Isometry> anchors;
};

enum class RealizationClass { HitomezashiOnly, CelticOnly, Both, Neither };

const char* realization_class_text(RealizationClass c);

// One of the 31 two-sided frieze groups.
struct CatalogueEntry {
  std::string label;
  RealizationClass realization;
  bool hitomezashi_realizable;
  bool celtic_realizable;
  AxisSet disp_a, disp_b, disp_c;  // symbols the label shows per axis
  AxisSet cont_a, cont_b, cont_c;  // full element content of the group
};

// All 31 groups in canonical order.  Display sets follow the printed label;
// content sets are the closure of the displayed generators (computed as
// band-group products and checked by the unit tests).
const std::vector<CatalogueEntry>& catalogue();

const CatalogueEntry& catalogue_entry(std::string_view label);  // UnknownLabel

// Accepts a label in canonical ASCII form ("p11[2a]", "p2'11", "p11~2"),
// with Unicode prime/tilde marks, with a capital P, or with the stacked
// pair written flat ("p112a", "p2'm11").  Returns the canonical form.
std::string normalize_label(std::string_view text);  // throws UnknownLabel

// Maps per-axis symbol sets to the catalogue label.  Both the displayed
// sets and the full content sets of each group are accepted as keys.
// Throws SignatureNotInCatalogue for any other combination.
std::string signature_to_label(const AxisSet& a, const AxisSet& b,
                               const AxisSet& c);

// Runs the oracle over every symmetry class: mirrors/rotations at every
// anchor in {0, 1/2, ..., P - 1/2}, glides/screws at shifts {0, P/2}.
Signature detect_signature(const Pattern& p);

struct ClassificationReport {
  std::string label;
  Signature signature;
  int period;
};

ClassificationReport classify(const Pattern& p);

}  // namespace hito
