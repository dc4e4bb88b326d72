#include "mm/digits.hpp"

#include <algorithm>

#include "mm/error.hpp"

namespace mm::digits {

void check_base(unsigned base) {
  if (base < 2 || base > kMaxBase) {
    throw Error(Errc::BaseOutOfRange, "base must be in 2.." + std::to_string(kMaxBase) + ", got " + std::to_string(base));
  }
}

char digit_char(unsigned d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

namespace {

unsigned digit_value(char c) { return c <= '9' ? static_cast<unsigned>(c - '0') : static_cast<unsigned>(c - 'a' + 10); }

// The last `count` base-`base` digits of n, zero padded.
std::string padded(const Natural& n, unsigned base, std::size_t count) {
  if (count == 0) return {};
  std::string s = n.get_str(static_cast<int>(base));
  if (s.size() < count) s.insert(0, count - s.size(), '0');
  return s;
}

}  // namespace

std::vector<std::uint8_t> Expansion::digit_values() const {
  std::vector<std::uint8_t> out;
  out.reserve(digits.size());
  for (char c : digits) out.push_back(static_cast<std::uint8_t>(digit_value(c)));
  return out;
}

std::string Expansion::str() const {
  std::string out = integer_part.get_str(static_cast<int>(base));
  if (!digits.empty()) out += "." + digits;
  return out;
}

Expansion certify(const Rational& lo, const Rational& hi, unsigned base, std::size_t count) {
  check_base(base);
  Expansion e;
  e.base = base;
  const Natural int_lo = floor_of(lo);
  if (int_lo != floor_of(hi)) return e;
  e.integer_part = int_lo;
  const Rational scale(upow(base, count));
  const Natural frac_lo = floor_of((lo - Rational(int_lo)) * scale);
  const Natural frac_hi = floor_of((hi - Rational(int_lo)) * scale);
  const std::string a = padded(frac_lo, base, count);
  const std::string b = padded(frac_hi, base, count);
  const auto common = static_cast<std::size_t>(std::mismatch(a.begin(), a.end(), b.begin()).first - a.begin());
  e.digits = a.substr(0, common);
  return e;
}

Expansion expand_exact(const Rational& value, unsigned base, std::size_t count) {
  check_base(base);
  Expansion e;
  e.base = base;
  e.exact_value = value;
  e.exact_value->canonicalize();
  e.integer_part = floor_of(value);
  Rational rest = value - Rational(e.integer_part);
  while (e.digits.size() < count && rest != 0) {
    rest *= base;
    const Natural d = floor_of(rest);
    e.digits.push_back(digit_char(static_cast<unsigned>(d.get_ui())));
    rest -= Rational(d);
  }
  e.terminated = rest == 0;
  return e;
}

DigitStream::DigitStream(unsigned base, Source source, std::size_t precision_factor)
    : base_(base), source_(std::move(source)), precision_factor_(std::max<std::size_t>(1, precision_factor)) {
  check_base(base);
}

Expansion DigitStream::prefix(std::size_t count) {
  if (cache_ && (cache_->digits.size() >= count || cache_->terminated)) {
    Expansion e = *cache_;
    if (e.digits.size() > count) e.digits.resize(count);
    return e;
  }
  std::size_t precision = (count + 2) * precision_factor_;
  for (int attempt = 0; attempt < 12; ++attempt, precision *= 2) {
    const Bracket br = source_(precision);
    Expansion e = br.exact ? expand_exact(*br.exact, base_, count) : certify(br.lo, br.hi, base_, count);
    e.precision_used = precision;
    if (e.digits.size() >= count || e.terminated) {
      cache_ = e;
      return e;
    }
  }
  throw Error(Errc::Uncertifiable, "could not certify " + std::to_string(count) + " digits");
}

}  // namespace mm::digits
