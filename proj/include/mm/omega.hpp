#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mm/bignum.hpp"
#include "mm/codec.hpp"
#include "mm/kernels.hpp"
#include "mm/machine.hpp"

namespace mm::omega {

using kernels::Enumeration;

// numerator / 2^exponent, kept with an odd numerator (or zero over 2^0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Natural numerator, std::uint64_t exponent);

  const Natural& numerator() const noexcept { return numerator_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  Rational to_rational() const;
  // "n/2^e", or "n" when the exponent is zero.
  std::string str() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  Natural numerator_ = 0;
  std::uint64_t exponent_ = 0;
};

struct HaltedProgram {
  BitString body;
  std::uint64_t output = 0;
  std::uint64_t steps = 0;
  std::size_t encoded_length() const noexcept { return 2 * body.size() + 2; }
};

// The N-th lower approximation: every program of at most N encoded bits run
// for N steps; each halter of k bits adds 2^-k.
struct ApproxReport {
  std::uint64_t n = 0;
  Dyadic value;
  std::vector<HaltedProgram> halted_programs;  // canonical order
};

// `list_programs = false` leaves halted_programs empty (value only).
ApproxReport omega_approx(std::uint64_t n, const Enumeration& e = {}, bool list_programs = true);
Dyadic approx_value(std::uint64_t n, const Enumeration& e = {});

// Kraft mass of the listed halting programs, summed program by program.
Dyadic kraft_mass(const std::vector<HaltedProgram>& programs);
// Kraft mass of everything discovered by omega_approx(n).
Dyadic kraft_sum(std::uint64_t n, const Enumeration& e = {});

// lo <= Omega_M <= hi with hi - lo == 2^-(body_cutoff + 2).
struct OmegaInterval {
  Dyadic lo;
  Dyadic hi;
  unsigned body_cutoff = 0;
};

// Exact interval from deciding every body of at most `body_cutoff` bits.
// Throws PrecisionTooLarge above the enumeration guard.
OmegaInterval omega_exact(unsigned body_cutoff, const Enumeration& e = {});

// Caches the exact halting census per body length so that successive
// refinements only pay for the new lengths.
class OmegaCertifier {
 public:
  explicit OmegaCertifier(Enumeration e = {}) : enumeration_(e) {}

  OmegaInterval interval(unsigned body_cutoff);
  // Bit n (n >= 1) after the binary point, or nullopt if no interval up to
  // the guard isolates it.
  std::optional<int> try_bit(unsigned n);
  // Throws Uncertifiable.
  int bit(unsigned n);
  // floor(2^n * Omega_M); throws Uncertifiable.
  Natural scaled_floor(unsigned n);
  // Smallest body cutoff whose interval fixes floor(2^n * Omega_M).
  std::optional<unsigned> certifying_cutoff(unsigned n);

  const Enumeration& enumeration() const noexcept { return enumeration_; }

 private:
  std::uint64_t halting_at(unsigned length);

  Enumeration enumeration_;
  std::vector<std::uint64_t> census_;  // census_[l]: halting bodies of l bits
};

int omega_bit(unsigned n, const Enumeration& e = {});

// floor(2^n * x) when the closed interval [lo, hi] lies inside one cell of
// width 2^-n (hi may touch the right edge: the true value is strictly below
// hi for this machine).
std::optional<Natural> common_scaled_floor(const Rational& lo, const Rational& hi, unsigned n);

// Semantic core of the bit-to-equation reduction: Program(n, k) computes
// the k-th approximation and halts (immediately: output 0, 0 steps) iff its
// n-th bit is 1, otherwise it loops (Diverges). Beyond the enumeration guard
// the bit is read off a certified bracket; Uncertifiable if that fails.
machine::HaltVerdict chaitin_bit_predicate(unsigned n, std::uint64_t k, const Enumeration& e = {});

// Count of k with 2^n * Omega_M > k > 0, i.e. floor(2^n * Omega_M). Its
// parity is bit n. Throws Uncertifiable.
Natural ord_kieu_count(unsigned n, const Enumeration& e = {});

}  // namespace mm::omega
