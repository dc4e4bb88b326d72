#include "mm/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mm/error.hpp"

namespace mm::constants {

// ---------------------------------------------------------------------------
// Series

Rational geometric_partial(const Rational& r, std::uint64_t n) {
  if (r == 1) return Rational(Natural(n) + 1);
  Rational power = 1;
  for (std::uint64_t i = 0; i <= n; ++i) power *= r;
  Rational out = (Rational(1) - power) / (Rational(1) - r);
  out.canonicalize();
  return out;
}

Rational geometric_limit(const Rational& r) {
  if (abs(r) >= 1) throw Error(Errc::RatioOutOfRange, "geometric series diverges for |r| >= 1, r = " + mm::to_string(r));
  Rational out = Rational(1) / (Rational(1) - r);
  out.canonicalize();
  return out;
}

namespace {

// Sum of 1/d over the given denominators, reduced once at the end.
Rational sum_reciprocals(const std::vector<Natural>& dens, const std::vector<int>& signs) {
  // Binary splitting keeps the intermediate fractions balanced.
  struct Part {
    Integer num;
    Natural den;
  };
  std::vector<Part> parts;
  parts.reserve(dens.size());
  for (std::size_t i = 0; i < dens.size(); ++i) parts.push_back({Integer(signs.empty() ? 1 : signs[i]), dens[i]});
  if (parts.empty()) return 0;
  while (parts.size() > 1) {
    std::vector<Part> next;
    next.reserve(parts.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      next.push_back({parts[i].num * parts[i + 1].den + parts[i + 1].num * parts[i].den, parts[i].den * parts[i + 1].den});
    }
    if (parts.size() % 2) next.push_back(parts.back());
    parts = std::move(next);
  }
  return make_rational(parts.front().num, parts.front().den);
}

}  // namespace

Rational harmonic_partial(std::uint64_t n) {
  if (n == 0) throw Error(Errc::ParameterOutOfRange, "harmonic_partial needs n >= 1");
  std::vector<Natural> dens;
  dens.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) dens.emplace_back(static_cast<unsigned long>(i));
  return sum_reciprocals(dens, {});
}

Rational leibniz_pi_partial(std::uint64_t n) {
  if (n == 0) throw Error(Errc::ParameterOutOfRange, "leibniz_pi_partial needs n >= 1");
  std::vector<Natural> dens;
  std::vector<int> signs;
  dens.reserve(n);
  signs.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    dens.emplace_back(static_cast<unsigned long>(2 * i + 1));
    signs.push_back(i % 2 == 0 ? 1 : -1);
  }
  return 4 * sum_reciprocals(dens, signs);
}

Rational euler_e_partial(std::uint64_t n) {
  Rational sum = 1;
  Natural fact = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    fact *= static_cast<unsigned long>(i);
    sum += Rational(Natural(1), fact);
  }
  sum.canonicalize();
  return sum;
}

Rational euler_e_remainder_bound(std::uint64_t n) {
  Natural fact = 1;
  for (std::uint64_t i = 2; i <= n + 1; ++i) fact *= static_cast<unsigned long>(i);
  return make_rational(2, fact);
}

Rational prime_reciprocal_partial(std::uint64_t n) {
  if (n < 2) throw Error(Errc::ParameterOutOfRange, "prime_reciprocal_partial needs n >= 2");
  if (n > 100'000'000) throw Error(Errc::ParameterOutOfRange, "prime_reciprocal_partial limited to n <= 10^8");
  std::vector<bool> composite(n + 1, false);
  std::vector<Natural> dens;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    dens.emplace_back(static_cast<unsigned long>(p));
    for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = true;
  }
  return sum_reciprocals(dens, {});
}

// ---------------------------------------------------------------------------
// Liouville

int liouville_digit(std::uint64_t i) {
  if (i == 0) throw Error(Errc::ParameterOutOfRange, "digit positions start at 1");
  std::uint64_t fact = 1;
  for (std::uint64_t m = 2;; ++m) {
    if (fact == i) return 1;
    if (fact > i / m) return 0;  // m! > i
    fact *= m;
  }
}

// ---------------------------------------------------------------------------
// Polynomials and bisection

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty() || (coeffs_.size() == 1 && coeffs_[0] == 0)) {
    throw Error(Errc::ParameterOutOfRange, "the zero polynomial has no isolated root");
  }
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

Bisection::Bisection(IntPolynomial p, Rational alpha, Rational beta) : p_(std::move(p)), lo_(alpha), hi_(beta) {
  if (lo_ > hi_) std::swap(lo_, hi_);
  sign_lo_ = p_.sign_at(lo_);
  if (sign_lo_ * p_.sign_at(hi_) >= 0) {
    throw Error(Errc::NoSignChange, "p(alpha) and p(beta) must have opposite signs on [" + mm::to_string(lo_) + ", " +
                                        mm::to_string(hi_) + "]");
  }
}

bool Bisection::step() {
  if (root_) return false;
  Rational mid = (lo_ + hi_) / 2;
  mid.canonicalize();
  const int s = p_.sign_at(mid);
  ++steps_;
  if (s == 0) {
    root_ = mid;
    lo_ = hi_ = mid;
    return false;
  }
  (s == sign_lo_ ? lo_ : hi_) = mid;
  return true;
}

void Bisection::refine_to(const Rational& target) {
  while (width() > target && step()) {
  }
}

Expansion algebraic_digits(const IntPolynomial& p, const Rational& alpha, const Rational& beta, unsigned base,
                           std::size_t count) {
  return algebraic_stream(p, alpha, beta, base).prefix(count);
}

DigitStream algebraic_stream(const IntPolynomial& p, const Rational& alpha, const Rational& beta, unsigned base,
                             std::size_t precision_factor) {
  digits::check_base(base);
  Bisection probe(p, alpha, beta);  // validates the sign change up front
  auto source = [probe, base](std::size_t precision) mutable -> digits::Bracket {
    const Rational grid(Natural(1), upow(base, precision));
    Bisection bis = probe;
    bis.refine_to(grid);
    if (bis.exact_root()) return {*bis.exact_root(), *bis.exact_root(), bis.exact_root()};
    // A root sitting exactly on a digit boundary would keep every bracket
    // straddling it; test the finest grid point inside the bracket.
    const Rational scale(upow(base, precision));
    const Rational q(floor_of(bis.hi() * scale), upow(base, precision));
    if (q >= bis.lo() && bis.polynomial().sign_at(q) == 0) return {q, q, q};
    return {bis.lo(), bis.hi(), std::nullopt};
  };
  return DigitStream(base, std::move(source), precision_factor);
}

// ---------------------------------------------------------------------------
// Series-defined constants

namespace {

DigitStream series_stream(unsigned base, std::size_t precision_factor,
                          std::function<digits::Bracket(std::size_t)> source) {
  return DigitStream(base, std::move(source), precision_factor);
}

Rational pow_ratio(unsigned base, std::uint64_t exponent) { return Rational(Natural(1), upow(base, exponent)); }

// arctan(1/x) bracketed by two consecutive alternating partial sums.
std::pair<Rational, Rational> arctan_inverse(unsigned long x, std::size_t terms) {
  Rational sum = 0;
  Natural power(x);
  const Natural x2 = Natural(x) * x;
  Rational last_term;
  for (std::size_t j = 0; j <= terms; ++j) {
    const Rational term(Natural(1), power * static_cast<unsigned long>(2 * j + 1));
    if (j == terms) {
      last_term = term;
      break;
    }
    sum += j % 2 == 0 ? term : Rational(-term);
    power *= x2;
  }
  sum.canonicalize();
  Rational next = terms % 2 == 0 ? Rational(sum + last_term) : Rational(sum - last_term);
  next.canonicalize();
  return sum < next ? std::pair{sum, next} : std::pair{next, sum};
}

}  // namespace

DigitStream bailey_crandall_stream(unsigned b, unsigned c, std::size_t precision_factor) {
  if (b < 2 || c < 2 || b > digits::kMaxBase) {
    throw Error(Errc::BaseOutOfRange, "need 2 <= b <= 36 and c >= 2, got b=" + std::to_string(b) + " c=" + std::to_string(c));
  }
  if (std::gcd(b, c) != 1) {
    throw Error(Errc::CommonFactor, "b=" + std::to_string(b) + " and c=" + std::to_string(c) + " share a factor");
  }
  auto source = [b, c](std::size_t precision) -> digits::Bracket {
    // Terms shrink so fast that the tail after term k is below twice term
    // k+1; stop once c^(k+1) >= precision + 1.
    Rational sum = 0;
    std::uint64_t ck = c;  // c^k
    for (std::uint64_t k = 1;; ++k) {
      sum += Rational(Natural(1), upow(c, k) * upow(b, ck));
      const std::uint64_t next = ck * c;
      if (next >= precision + 1 || next > (1ull << 40)) {
        sum.canonicalize();
        Rational tail(Natural(2), upow(c, k + 1) * upow(b, next));
        tail.canonicalize();
        return {sum, sum + tail, std::nullopt};
      }
      ck = next;
    }
  };
  return series_stream(b, precision_factor, std::move(source));
}

Expansion bailey_crandall_digits(unsigned b, unsigned c, std::size_t count) {
  if (count > kSeriesDigitGuard) throw Error(Errc::ParameterOutOfRange, "at most 65536 series digits");
  return bailey_crandall_stream(b, c).prefix(count);
}

Expansion stoneham_bits(std::size_t count) { return bailey_crandall_digits(2, 3, count); }

DigitStream pi_stream(unsigned base, std::size_t precision_factor) {
  digits::check_base(base);
  auto source = [base](std::size_t precision) -> digits::Bracket {
    // pi = 16 arctan(1/5) - 4 arctan(1/239); 25^terms must beat 32 * base^(p+1).
    const double need = (static_cast<double>(precision) + 1) * std::log(static_cast<double>(base)) + std::log(32.0);
    const auto terms = static_cast<std::size_t>(need / std::log(25.0)) + 2;
    const auto [a_lo, a_hi] = arctan_inverse(5, terms);
    const auto [b_lo, b_hi] = arctan_inverse(239, terms);
    return {16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo, std::nullopt};
  };
  return series_stream(base, precision_factor, std::move(source));
}

DigitStream e_stream(unsigned base, std::size_t precision_factor) {
  digits::check_base(base);
  auto source = [base](std::size_t precision) -> digits::Bracket {
    const Rational target = pow_ratio(base, precision + 1);
    std::uint64_t n = 1;
    while (euler_e_remainder_bound(n) > target) n += 8;
    const Rational lo = euler_e_partial(n);
    return {lo, lo + euler_e_remainder_bound(n), std::nullopt};
  };
  return series_stream(base, precision_factor, std::move(source));
}

DigitStream sqrt2_stream(unsigned base, std::size_t precision_factor) {
  return algebraic_stream(IntPolynomial({-2, 0, 1}), 1, 2, base, precision_factor);
}

DigitStream liouville_stream(unsigned base, std::size_t precision_factor) {
  digits::check_base(base);
  auto source = [base](std::size_t precision) -> digits::Bracket {
    // Decimal places needed so the tail 2 * 10^-((m+1)!) is below base^-(p+1).
    const double places = (static_cast<double>(precision) + 1) * std::log10(static_cast<double>(base)) + 1;
    Rational sum = 0;
    std::uint64_t fact = 1;
    for (std::uint64_t m = 1;; ++m) {
      fact *= m;
      sum += pow_ratio(10, fact);
      const std::uint64_t next = fact * (m + 1);
      if (static_cast<double>(next) >= places) {
        sum.canonicalize();
        Rational tail = 2 * pow_ratio(10, next);
        tail.canonicalize();
        return {sum, sum + tail, std::nullopt};
      }
    }
  };
  return series_stream(base, precision_factor, std::move(source));
}

Expansion named_digits(const std::string& name, unsigned base, std::size_t count) {
  if (name == "pi") return pi_stream(base).prefix(count);
  if (name == "e") return e_stream(base).prefix(count);
  if (name == "sqrt2") return sqrt2_stream(base).prefix(count);
  if (name == "liouville") return liouville_stream(base).prefix(count);
  if (name == "stoneham") {
    if (base != 2) throw Error(Errc::BaseOutOfRange, "the Stoneham number is defined in base 2 (use 'const bc')");
    return stoneham_bits(count);
  }
  throw Error(Errc::ParameterOutOfRange, "unknown constant: " + name);
}

// ---------------------------------------------------------------------------
// Interpolation

Rational evaluate(const RationalPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

std::string to_string(const RationalPolynomial& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    const bool negative = p[i] < 0;
    const Rational mag = abs(p[i]);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mm::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

RationalPolynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  if (points.empty()) throw Error(Errc::ParameterOutOfRange, "no points to interpolate");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw Error(Errc::DuplicateAbscissa, "x = " + mm::to_string(points[i].first) + " appears twice");
      }
    }
  }
  RationalPolynomial result(points.size(), Rational(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j).
    RationalPolynomial basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      RationalPolynomial next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * points[j].first;
      }
      basis = std::move(next);
      denom *= points[i].first - points[j].first;
    }
    const Rational scale = points[i].second / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * scale;
  }
  for (auto& c : result) c.canonicalize();
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  return result;
}

// ---------------------------------------------------------------------------
// Primes

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; static_cast<unsigned __int128>(d) * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<GapMember> composite_gap(std::uint64_t n) {
  if (n < 2) throw Error(Errc::ParameterOutOfRange, "composite_gap needs N >= 2");
  if (n > 100'000) throw Error(Errc::ParameterOutOfRange, "composite_gap limited to N <= 100000");
  Natural fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  std::vector<GapMember> out;
  for (std::uint64_t i = 2; i <= n; ++i) out.push_back({fact + static_cast<unsigned long>(i), i});
  return out;
}

EuclidCheck euclid_bound_check(std::uint64_t n) {
  if (n < 2 || n > 20) throw Error(Errc::ParameterOutOfRange, "euclid_bound_check needs 2 <= N <= 20");
  EuclidCheck out;
  out.next_prime = n + 1;
  while (!is_prime(out.next_prime)) ++out.next_prime;
  mpz_fac_ui(out.bound.get_mpz_t(), n);
  out.bound += 1;
  out.bound_holds = Natural(static_cast<unsigned long>(out.next_prime)) <= out.bound;
  return out;
}

Natural proper_divisor_sum(const Natural& m) {
  if (m < 1) throw Error(Errc::ParameterOutOfRange, "divisor sums need m >= 1");
  Natural rest = m;
  Natural sigma = 1;
  auto take = [&](std::uint64_t p) {
    Natural power_sum = 1;
    Natural power = 1;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= static_cast<unsigned long>(p);
      power *= static_cast<unsigned long>(p);
      power_sum += power;
    }
    sigma *= power_sum;
  };
  take(2);
  for (std::uint64_t p = 3; !rest.fits_ulong_p() && Natural(static_cast<unsigned long>(p)) * p <= rest; p += 2) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) take(p);
  }
  // Once the cofactor fits in a machine word, finish in machine arithmetic.
  std::uint64_t small = rest.get_ui();
  for (std::uint64_t p = 3; static_cast<unsigned __int128>(p) * p <= small; p += 2) {
    if (small % p != 0) continue;
    std::uint64_t power_sum = 1, power = 1;
    while (small % p == 0) {
      small /= p;
      power *= p;
      power_sum += power;
    }
    sigma *= static_cast<unsigned long>(power_sum);
  }
  if (small > 1) sigma *= Natural(static_cast<unsigned long>(small)) + 1;
  return sigma - m;
}

std::optional<Natural> perfect_from_mersenne(unsigned n) {
  if (n < 2 || n > 63) throw Error(Errc::ParameterOutOfRange, "perfect_from_mersenne needs 2 <= n <= 63");
  const std::uint64_t mersenne = (std::uint64_t{1} << n) - 1;
  if (!is_prime(mersenne)) return std::nullopt;
  const Natural perfect = pow2(n - 1) * static_cast<unsigned long>(mersenne);
  if (proper_divisor_sum(perfect) != perfect) throw std::logic_error("Euclid's construction failed to be perfect");
  return perfect;
}

}  // namespace mm::constants
