#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mm/bignum.hpp"

namespace mm::normality {

// Overlapping-window counts of every k-digit block.
struct BlockStats {
  unsigned base = 2;
  unsigned k = 1;
  std::vector<std::uint64_t> counts;  // indexed by the block's base-`base` numeral
  std::uint64_t total_windows = 0;
  Rational max_deviation;  // max over blocks of |count/total - base^-k|

  std::string block_name(std::size_t index) const;
  Rational frequency(std::size_t index) const;
};

// Throws PrefixTooShort when fewer than k digits are given, BaseOutOfRange
// for a digit >= base. jobs <= 0 means the OpenMP default; jobs == 1 runs the
// serial kernel.
BlockStats block_frequencies(std::span<const std::uint8_t> digits, unsigned base, unsigned k, int jobs = 1);

struct Verdict {
  bool pass = false;
  Rational statistic;  // max deviation
  Rational threshold;
  unsigned k = 1;
};

// PASS iff the k-block max deviation is strictly below the threshold.
Verdict simple_normal_test(std::span<const std::uint8_t> digits, unsigned base, const Rational& threshold,
                           unsigned k = 1, int jobs = 1);

std::vector<BlockStats> normality_profile(std::span<const std::uint8_t> digits, unsigned base, unsigned k_max,
                                          int jobs = 1);

// Three binomial standard deviations for a block of probability base^-k
// over `windows` samples: 3 * sqrt(p (1 - p) / windows).
double three_sigma_bound(unsigned base, unsigned k, std::uint64_t windows);

}  // namespace mm::normality
