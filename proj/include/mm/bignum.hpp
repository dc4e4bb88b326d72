#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mm {

// Arbitrary-precision integers and rationals are GMP's C++ classes. Natural
// is a plain alias: non-negativity is an invariant of the call sites, not of
// the type.
using Natural = mpz_class;
using Integer = mpz_class;
using Rational = mpq_class;

inline Natural pow2(std::uint64_t e) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Natural upow(const Natural& base, unsigned long e) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Natural upow(unsigned long base, unsigned long e) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Natural floor_of(const Rational& q) {
  Natural r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

// Parses "n", "-n", "n/d" or a decimal "a.b"; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

}  // namespace mm
