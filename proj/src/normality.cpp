#include "mm/normality.hpp"

#include <cmath>

#include "mm/digits.hpp"
#include "mm/error.hpp"
#include "mm/kernels.hpp"

namespace mm::normality {

std::string BlockStats::block_name(std::size_t index) const {
  std::string name(k, '0');
  for (std::size_t i = k; i-- > 0;) {
    name[i] = digits::digit_char(static_cast<unsigned>(index % base));
    index /= base;
  }
  return name;
}

Rational BlockStats::frequency(std::size_t index) const {
  return make_rational(Natural(static_cast<unsigned long>(counts[index])), Natural(static_cast<unsigned long>(total_windows)));
}

BlockStats block_frequencies(std::span<const std::uint8_t> digits, unsigned base, unsigned k, int jobs) {
  digits::check_base(base);
  if (k == 0) throw Error(Errc::ParameterOutOfRange, "block length must be at least 1");
  if (digits.size() < k) {
    throw Error(Errc::PrefixTooShort, "need at least " + std::to_string(k) + " digits, got " + std::to_string(digits.size()));
  }
  for (auto d : digits) {
    if (d >= base) throw Error(Errc::BaseOutOfRange, "digit " + std::to_string(d) + " is not a base-" + std::to_string(base) + " digit");
  }
  BlockStats s;
  s.base = base;
  s.k = k;
  s.counts = jobs == 1 ? kernels::block_counts_serial(digits, base, k) : kernels::block_counts_parallel(digits, base, k, jobs);
  s.total_windows = digits.size() - k + 1;
  const Rational expected(Natural(1), upow(base, k));
  s.max_deviation = 0;
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    const Rational dev = abs(s.frequency(i) - expected);
    if (dev > s.max_deviation) s.max_deviation = dev;
  }
  return s;
}

Verdict simple_normal_test(std::span<const std::uint8_t> digits, unsigned base, const Rational& threshold, unsigned k,
                           int jobs) {
  const auto stats = block_frequencies(digits, base, k, jobs);
  return {stats.max_deviation < threshold, stats.max_deviation, threshold, k};
}

std::vector<BlockStats> normality_profile(std::span<const std::uint8_t> digits, unsigned base, unsigned k_max, int jobs) {
  std::vector<BlockStats> out;
  for (unsigned k = 1; k <= k_max; ++k) out.push_back(block_frequencies(digits, base, k, jobs));
  return out;
}

double three_sigma_bound(unsigned base, unsigned k, std::uint64_t windows) {
  const double p = std::pow(static_cast<double>(base), -static_cast<double>(k));
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(windows));
}

}  // namespace mm::normality
