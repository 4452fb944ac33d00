#pragma once
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hito/classify.hpp"
#include "hito/pattern.hpp"
#include "hito/word.hpp"

namespace hito {

// Word facts that drive the impossibility results.

// No word equals its complement, and no odd-length word equals the
// complement of its reverse (the middle digit breaks it).
bool lemma_I_holds(const Word& z);

// Condition for a mirror perpendicular to the strip axis.
//
// anchored=true is the narrow reading: x is a palindrome of even length,
// which puts a mirror on the cell centre at column (|x|-1)/2.  The
// generalized reading allows re-anchoring: it doubles an odd-length x and
// asks whether any rotation of the (even-length) expansion is a palindrome.
// The generalized form agrees exactly with geometric mirror detection.
bool mirror_condition_II(const Word& x, bool anchored);

// The words of the pattern produced by rotating the frieze half a turn
// about the strip axis: x stays put when |y| is even and is complemented
// when |y| is odd; y is reversed.  Comparing the result with the back-side
// words (both complemented) shows the rotation can never be a symmetry.
std::pair<Word, Word> rotation_about_a_words(const Word& x, const Word& y);

// One classified pattern of the census.
struct CensusRow {
  Word x;
  Word y;
  std::string label;
  int period;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// Calls fn for every pattern with 1 <= |x| <= max_x and 2 <= |y| <= max_y,
// in deterministic length-lexicographic order: |x| ascending, then |y|
// ascending, then x lexicographic, then y lexicographic.
void for_each_pattern(int max_x, int max_y,
                      const std::function<void(const Pattern&)>& fn);

// Classifies every pattern in enumeration order.
void enumerate_patterns(int max_x, int max_y,
                        const std::function<void(const CensusRow&)>& fn);

// The census as CSV text with header "x,y,label,period".  Byte-identical
// across runs at equal bounds.
std::string census_csv(int max_x, int max_y);

struct Violation {
  CensusRow row;
  std::string reason;  // "theorem-1", "theorem-2", "theorem-3", "label-not-realizable"
};

struct TheoremReport {
  int max_x = 0;
  int max_y = 0;
  long patterns_checked = 0;
  std::vector<Violation> violations;
  std::vector<std::string> observed_labels;  // catalogue order
  bool all_observed_realizable = false;
};

// Exhaustively checks the impossibility results over the census:
//   theorem 1: no pattern's content has m on axis c;
//   theorem 2: no pattern's content has 2 on axis a or axis b;
//   theorem 3: no pattern's content has m on axis a together with a on c.
// Also records the set of observed labels and whether every one of them is
// marked hitomezashi-realizable in the catalogue.
TheoremReport verify_theorems(int max_x, int max_y);

// First pattern in enumeration order whose label matches (any accepted
// label spelling).  Throws UnknownLabel for text outside the catalogue.
std::optional<Pattern> find_witness(std::string_view label, int max_x,
                                    int max_y);

}  // namespace hito
