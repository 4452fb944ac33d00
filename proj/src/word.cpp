#include "hito/word.hpp"

#include <algorithm>

namespace hito {

namespace {

long floor_mod(long i, long n) {
  long r = i % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Word::Word(std::string_view bits) {
  if (bits.empty()) throw ParseError("empty word");
  bits_.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw ParseError("bad digit '" + std::string(1, ch) + "' in word");
    bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
}

Word Word::from_bits(std::vector<std::uint8_t> bits) {
  if (bits.empty()) throw ParseError("empty word");
  for (std::uint8_t b : bits)
    if (b > 1) throw ParseError("word bits must be 0 or 1");
  Word w;
  w.bits_ = std::move(bits);
  return w;
}

Word Word::from_index(int length, std::uint64_t index) {
  if (length < 1 || length > 63) throw ParseError("word length out of range");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k)
    bits[static_cast<std::size_t>(k)] =
        static_cast<std::uint8_t>((index >> (length - 1 - k)) & 1u);
  return from_bits(std::move(bits));
}

std::uint8_t Word::bit_mod(long i) const {
  return bits_[static_cast<std::size_t>(floor_mod(i, size()))];
}

Word Word::complement() const {
  Word w = *this;
  for (auto& b : w.bits_) b ^= 1u;
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.bits_.begin(), w.bits_.end());
  return w;
}

Word Word::rotated(long k) const {
  Word w = *this;
  for (int i = 0; i < size(); ++i)
    w.bits_[static_cast<std::size_t>(i)] = bit_mod(i + k);
  return w;
}

bool Word::palindrome() const { return *this == reversed(); }

std::string Word::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

}  // namespace hito
