#pragma once
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hito/errors.hpp"

namespace hito {

// An immutable nonempty sequence of binary digits.
//
// A word records the state of the first stitch of each line of stitching:
// bit k of the vertical word governs column k, bit j of the horizontal word
// governs row j.  Stitches and gaps alternate along a line, so the first
// state determines the whole line.
class Word {
 public:
  // Parses a string of '0'/'1' digits.  Throws ParseError if empty or if any
  // other character appears.
  explicit Word(std::string_view bits);

  // Builds a word from 0/1 byte values.  Throws ParseError on empty input or
  // values other than 0 and 1.
  static Word from_bits(std::vector<std::uint8_t> bits);

  // The word of the given length whose digits are `index` in binary, most
  // significant digit first.  Enumerating index 0 .. 2^length-1 yields words
  // in lexicographic order.
  static Word from_index(int length, std::uint64_t index);

  int size() const { return static_cast<int>(bits_.size()); }
  std::uint8_t bit(int i) const { return bits_[static_cast<std::size_t>(i)]; }

  // Periodic extension: the bit at any integer position (floor modulo).
  std::uint8_t bit_mod(long i) const;

  Word complement() const;
  Word reversed() const;

  // Left rotation: result[i] = bit((i + k) mod size), for any integer k.
  Word rotated(long k) const;

  bool palindrome() const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word() = default;
  std::vector<std::uint8_t> bits_;
};

}  // namespace hito
