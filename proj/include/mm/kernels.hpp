#pragma once

// Enumeration and counting kernels. Each kernel has a serial reference
// version and an OpenMP version; the parallel results are identical to the
// serial ones for every thread count (integer reductions, chunk-ordered
// merges).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace mm::kernels {

// Limits and execution policy shared by every enumeration over programs.
struct Enumeration {
  // Largest body length (bits) any enumeration may visit: 2^(guard+1) bodies.
  unsigned guard = 24;
  // OpenMP threads; <= 0 means the runtime default.
  int jobs = 1;
  // Route through the serial reference kernels instead.
  bool serial = false;
};

// Which verdict decides "halts" during an enumeration.
struct HaltMode {
  // nullopt: the exact decider. Otherwise: simulation with this step budget.
  std::optional<std::uint64_t> budget;
};

struct HaltRecord {
  std::uint64_t index = 0;  // body bits, most significant first
  std::uint64_t output = 0;
  std::uint64_t steps = 0;
  friend bool operator==(const HaltRecord&, const HaltRecord&) = default;
};

// Keeps a halting record when it returns true. Must be thread-safe (pure).
using OutputFilter = std::function<bool(std::uint64_t output)>;

// Number of bodies of exactly `body_length` bits that halt.
std::uint64_t count_halting_serial(unsigned body_length, HaltMode mode);
std::uint64_t count_halting_parallel(unsigned body_length, HaltMode mode, int jobs);

// Halting bodies of exactly `body_length` bits in lexicographic order.
std::vector<HaltRecord> collect_halting_serial(unsigned body_length, HaltMode mode, const OutputFilter& keep = {});
std::vector<HaltRecord> collect_halting_parallel(unsigned body_length, HaltMode mode, int jobs,
                                                 const OutputFilter& keep = {});

// Overlapping-window block counts: counts[v] is the number of windows of k
// digits whose base-`base` numeral is v. counts.size() == base^k.
std::vector<std::uint64_t> block_counts_serial(std::span<const std::uint8_t> digits, unsigned base, unsigned k);
std::vector<std::uint64_t> block_counts_parallel(std::span<const std::uint8_t> digits, unsigned base, unsigned k,
                                                 int jobs);

// Dispatch on Enumeration::serial.
std::uint64_t count_halting(unsigned body_length, HaltMode mode, const Enumeration& e);
std::vector<HaltRecord> collect_halting(unsigned body_length, HaltMode mode, const Enumeration& e,
                                        const OutputFilter& keep = {});

// Thread count used when a caller passes jobs <= 0.
int default_jobs() noexcept;

}  // namespace mm::kernels
