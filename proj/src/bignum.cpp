#include "mm/bignum.hpp"

#include <cctype>
#include <stdexcept>

namespace mm {

namespace {

bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto dot = text.find('.');
  if (dot != std::string::npos && text.find('/') == std::string::npos) {
    // Decimal "a.b" is exactly ab / 10^len(b).
    const std::string frac = text.substr(dot + 1);
    if (!all_digits(frac, 0)) throw std::invalid_argument("not a rational: " + text);
    const std::string whole = text.substr(0, dot);
    const bool bare = whole.empty() || whole == "-" || whole == "+";
    const Rational w = bare ? Rational(0) : parse_rational(whole);
    Rational f = make_rational(Integer(frac, 10), upow(10, frac.size()));
    if (!whole.empty() && whole[0] == '-') f = -f;
    return w + f;
  }
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::size_t sign = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!all_digits(num, sign)) throw std::invalid_argument("not a rational: " + text);
  Integer n(num.substr(sign), 10);
  if (sign && num[0] == '-') n = -n;
  Integer d = 1;
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!all_digits(den, 0)) throw std::invalid_argument("not a rational: " + text);
    d = Integer(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  }
  return make_rational(n, d);
}

}  // namespace mm
