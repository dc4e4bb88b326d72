#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mm/bignum.hpp"
#include "mm/digits.hpp"

namespace mm::constants {

using digits::DigitStream;
using digits::Expansion;

// ---------------------------------------------------------------------------
// Series

// 1 + r + ... + r^n, via (1 - r^(n+1)) / (1 - r).
Rational geometric_partial(const Rational& r, std::uint64_t n);
// 1 / (1 - r); throws RatioOutOfRange unless |r| < 1.
Rational geometric_limit(const Rational& r);

Rational harmonic_partial(std::uint64_t n);

// 4 * (1 - 1/3 + 1/5 - ...), n terms. Consecutive partial sums bracket pi.
Rational leibniz_pi_partial(std::uint64_t n);

// 1 + 1/1! + ... + 1/n!. The error is below 2/(n+1)!.
Rational euler_e_partial(std::uint64_t n);
Rational euler_e_remainder_bound(std::uint64_t n);

// Sum of 1/p over primes p <= n.
Rational prime_reciprocal_partial(std::uint64_t n);

// ---------------------------------------------------------------------------
// Digit streams

// Decimal digit i (i >= 1) of sum 10^-(m!): 1 exactly when i is a factorial.
int liouville_digit(std::uint64_t i);

// Integer coefficients, ascending degree; leading coefficient nonzero.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<Integer> coefficients);
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;

 private:
  std::vector<Integer> coeffs_;
};

// Successive interval halving with exact rational midpoints.
class Bisection {
 public:
  // Throws NoSignChange unless p(alpha) * p(beta) < 0.
  Bisection(IntPolynomial p, Rational alpha, Rational beta);

  // Halves the interval. Returns false (and stops) when the midpoint is an
  // exact root.
  bool step();
  // Halves until width <= target or an exact root turns up.
  void refine_to(const Rational& width);

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  std::size_t steps() const noexcept { return steps_; }
  const std::optional<Rational>& exact_root() const noexcept { return root_; }
  const IntPolynomial& polynomial() const noexcept { return p_; }

 private:
  IntPolynomial p_;
  Rational lo_, hi_;
  int sign_lo_;
  std::size_t steps_ = 0;
  std::optional<Rational> root_;
};

// Certified digits of the single root of p in [alpha, beta]. An exact
// rational root (hit at a midpoint, or sitting on a digit boundary) ends the
// stream with exact_value set.
Expansion algebraic_digits(const IntPolynomial& p, const Rational& alpha, const Rational& beta, unsigned base,
                           std::size_t count);
DigitStream algebraic_stream(const IntPolynomial& p, const Rational& alpha, const Rational& beta, unsigned base,
                             std::size_t precision_factor = 1);

inline constexpr std::size_t kSeriesDigitGuard = std::size_t{1} << 16;

// sum over k >= 1 of 1 / (c^k * b^(c^k)). Throws BaseOutOfRange (b < 2 or
// c < 2) or CommonFactor (gcd(b, c) > 1).
DigitStream bailey_crandall_stream(unsigned b, unsigned c, std::size_t precision_factor = 1);
Expansion bailey_crandall_digits(unsigned b, unsigned c, std::size_t count);
// b = 2, c = 3. Throws ParameterOutOfRange above 2^16 digits.
Expansion stoneham_bits(std::size_t count);

DigitStream pi_stream(unsigned base, std::size_t precision_factor = 1);
DigitStream e_stream(unsigned base, std::size_t precision_factor = 1);
DigitStream sqrt2_stream(unsigned base, std::size_t precision_factor = 1);
DigitStream liouville_stream(unsigned base, std::size_t precision_factor = 1);

// "pi", "e", "sqrt2", "liouville", "stoneham" (base 2 only).
Expansion named_digits(const std::string& name, unsigned base, std::size_t count);

// ---------------------------------------------------------------------------
// Interpolation

// Ascending rational coefficients.
using RationalPolynomial = std::vector<Rational>;
Rational evaluate(const RationalPolynomial& p, const Rational& x);
std::string to_string(const RationalPolynomial& p);

// Unique polynomial of degree < points.size() through every point. Throws
// DuplicateAbscissa.
RationalPolynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

// ---------------------------------------------------------------------------
// Primes

bool is_prime(std::uint64_t n);

struct GapMember {
  Natural value;
  std::uint64_t divisor = 0;
};
// N! + i for i = 2..N, each with the divisor i. Requires N >= 2.
std::vector<GapMember> composite_gap(std::uint64_t n);

struct EuclidCheck {
  std::uint64_t next_prime = 0;
  Natural bound;  // N! + 1
  bool bound_holds = false;
};
// Requires 2 <= N <= 20.
EuclidCheck euclid_bound_check(std::uint64_t n);

// 2^(n-1) * (2^n - 1) when 2^n - 1 is prime, checked against its proper
// divisor sum. Requires 2 <= n <= 63.
std::optional<Natural> perfect_from_mersenne(unsigned n);
// Sum of the proper divisors of m, from its trial-division factorisation.
Natural proper_divisor_sum(const Natural& m);

}  // namespace mm::constants
