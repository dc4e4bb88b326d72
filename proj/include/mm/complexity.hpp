#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mm/kernels.hpp"
#include "mm/machine.hpp"

namespace mm::complexity {

using kernels::Enumeration;

struct SearchOptions {
  Enumeration enumeration;
  // Exact decider by default; a budget switches to simulation.
  kernels::HaltMode mode;
};

// Smallest program producing `target` among programs of at most
// `search_bound` encoded bits. h and witness are empty when none exists.
struct ComplexityRecord {
  std::uint64_t target = 0;
  std::optional<std::uint64_t> h;
  std::optional<machine::ToyProgram> witness;
  std::uint64_t search_bound = 0;
};

// Throws BoundTooLarge if the bound needs bodies longer than the guard.
ComplexityRecord h_of(std::uint64_t target, std::uint64_t bound, const SearchOptions& opts = {});

struct ElegantProgram {
  machine::ToyProgram program;
  std::uint64_t output = 0;
  std::uint64_t steps = 0;
};

// Halting programs of at most `bound` bits that no strictly smaller halting
// program imitates; equal-size ties are all listed. Canonical order.
std::vector<ElegantProgram> elegant_programs(std::uint64_t bound, const SearchOptions& opts = {});

// Cantor pairing (x+y)(x+y+1)/2 + y and its inverse. Throws
// ParameterOutOfRange on 64-bit overflow.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n);
// Cantor pairing of (min, max): order-blind.
std::uint64_t symmetric_pair(std::uint64_t x, std::uint64_t y);

enum class Pairing { Cantor, Symmetric };

struct MutualInformation {
  std::int64_t value = 0;  // H(x) + H(y) - H(x,y); may be negative here
  std::uint64_t h_x = 0, h_y = 0, h_xy = 0;
  std::uint64_t paired = 0;
};

// Throws Unresolvable if any of the three searches comes back empty.
MutualInformation mutual_information(std::uint64_t x, std::uint64_t y, std::uint64_t bound,
                                     Pairing pairing = Pairing::Cantor, const SearchOptions& opts = {});

}  // namespace mm::complexity
