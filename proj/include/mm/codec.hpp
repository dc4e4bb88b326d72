#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mm/bignum.hpp"

namespace mm {

// Finite ordered sequence of bits. Text form is ASCII '0'/'1' with no
// separators.
class BitString {
 public:
  BitString() = default;
  // Throws mm::Error(Malformed) on characters other than '0' and '1'.
  explicit BitString(std::string_view ascii);

  // The low `width` bits of `value`, most significant first.
  static BitString from_uint(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }

  void push_back(bool bit) { bits_.push_back(bit); }
  BitString& operator+=(const BitString& tail);
  friend BitString operator+(BitString head, const BitString& tail) { return head += tail; }

  BitString slice(std::size_t pos, std::size_t len = static_cast<std::size_t>(-1)) const;
  bool starts_with(const BitString& prefix) const noexcept;
  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<bool> bits_;
};

// Positional base 2. number_to_bits(0) == "0"; leading zeros are accepted
// and ignored by bits_to_number, which rejects an empty string (Malformed).
BitString number_to_bits(const Natural& n);
Natural bits_to_number(const BitString& bits);
// Length of the canonical numeral of n; numeral_length(0) == 1.
std::size_t numeral_length(std::uint64_t n) noexcept;

// A text maps to the natural whose binary numeral is 1 followed by the
// 8-bit ASCII codes of its characters. Throws NotTextEncodable.
Natural text_to_number(std::string_view text);
std::string number_to_text(const Natural& n);

namespace codec {

enum class Scheme { Doubled, Header, TwoHeader };

std::string_view scheme_name(Scheme s) noexcept;
// Accepts "doubled", "header", "two-header".
Scheme parse_scheme(std::string_view name);

// Every payload bit doubled, then the terminator 01.
BitString encode_doubled(const BitString& payload);
// Doubled length numeral, then the raw payload.
BitString encode_header(const BitString& payload);
// Doubled numeral of the length numeral's length, the raw length numeral,
// then the raw payload.
BitString encode_two_header(const BitString& payload);
BitString encode(Scheme scheme, const BitString& payload);

struct Decoded {
  BitString payload;
  BitString remainder;
};

// Reads one codeword from the front of `stream`. The doubled decoder accepts
// either unequal pair (01 or 10) as terminator. Throws Truncated when the
// stream ends inside a codeword, Malformed on a non-canonical length numeral.
Decoded decode(Scheme scheme, const BitString& stream);

// Decodes codewords until the stream is exhausted.
std::vector<BitString> decode_all(Scheme scheme, const BitString& stream);

}  // namespace codec
}  // namespace mm
