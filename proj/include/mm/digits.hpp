#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mm/bignum.hpp"

namespace mm::digits {

inline constexpr unsigned kMaxBase = 36;

// An enclosure of a real: lo <= value <= hi, or the value itself.
struct Bracket {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
};

// Produces a bracket whose width is at most base^-precision.
using Source = std::function<Bracket(std::size_t precision)>;

// A certified base-`base` expansion: integer part plus fractional digits.
struct Expansion {
  unsigned base = 10;
  Natural integer_part = 0;
  std::string digits;                   // '0'-'9', then 'a'-'z'
  std::optional<Rational> exact_value;  // set when the value is known exactly
  bool terminated = false;              // exact and every later digit is 0
  std::size_t precision_used = 0;

  std::vector<std::uint8_t> digit_values() const;
  // "integer.digits", or just the integer part when there are no digits.
  std::string str() const;
};

char digit_char(unsigned d);

// Digits shared by every real in [lo, hi], at most `count` of them. The
// integer part must agree; otherwise the result has no digits.
Expansion certify(const Rational& lo, const Rational& hi, unsigned base, std::size_t count);

// Expansion of a known rational; stops early when it terminates.
Expansion expand_exact(const Rational& value, unsigned base, std::size_t count);

// Lazily refined certified digit stream. Copies share nothing mutable and can
// be consumed independently.
class DigitStream {
 public:
  // `precision_factor` scales every precision request; the certified prefix
  // must not depend on it.
  DigitStream(unsigned base, Source source, std::size_t precision_factor = 1);

  unsigned base() const noexcept { return base_; }

  // At least `count` certified fractional digits, or fewer if the value is
  // exact and its expansion terminates. Throws Uncertifiable if refinement
  // gives up.
  Expansion prefix(std::size_t count);

 private:
  unsigned base_;
  Source source_;
  std::size_t precision_factor_;
  std::optional<Expansion> cache_;
};

void check_base(unsigned base);

}  // namespace mm::digits
