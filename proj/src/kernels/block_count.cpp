#include <algorithm>
#include <stdexcept>

#include "mm/kernels.hpp"

namespace mm::kernels {

namespace {

std::size_t block_space(unsigned base, unsigned k) {
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n > (std::size_t{1} << 26) / base) throw std::length_error("block space too large");
    n *= base;
  }
  return n;
}

// Counts windows starting in [begin, end).
void count_range(std::span<const std::uint8_t> digits, unsigned base, unsigned k, std::size_t modulus,
                 std::size_t begin, std::size_t end, std::vector<std::uint64_t>& counts) {
  if (begin >= end) return;
  std::size_t window = 0;
  for (std::size_t i = begin; i < begin + k - 1; ++i) window = window * base + digits[i];
  for (std::size_t start = begin; start < end; ++start) {
    window = (window * base + digits[start + k - 1]) % modulus;
    ++counts[window];
  }
}

std::size_t window_count(std::span<const std::uint8_t> digits, unsigned k) {
  return digits.size() >= k && k > 0 ? digits.size() - k + 1 : 0;
}

}  // namespace

std::vector<std::uint64_t> block_counts_serial(std::span<const std::uint8_t> digits, unsigned base, unsigned k) {
  const std::size_t modulus = block_space(base, k);
  std::vector<std::uint64_t> counts(modulus, 0);
  count_range(digits, base, k, modulus, 0, window_count(digits, k), counts);
  return counts;
}

std::vector<std::uint64_t> block_counts_parallel(std::span<const std::uint8_t> digits, unsigned base, unsigned k,
                                                 int jobs) {
  const std::size_t modulus = block_space(base, k);
  const std::size_t windows = window_count(digits, k);
  const int threads = std::max(1, jobs > 0 ? jobs : default_jobs());
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(threads),
                                                  std::vector<std::uint64_t>(modulus, 0));
#pragma omp parallel for num_threads(threads) schedule(static, 1)
  for (int t = 0; t < threads; ++t) {
    const std::size_t begin = windows * static_cast<std::size_t>(t) / static_cast<std::size_t>(threads);
    const std::size_t end = windows * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(threads);
    count_range(digits, base, k, modulus, begin, end, partial[static_cast<std::size_t>(t)]);
  }
  std::vector<std::uint64_t> counts(modulus, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < modulus; ++i) counts[i] += p[i];
  }
  return counts;
}

}  // namespace mm::kernels
