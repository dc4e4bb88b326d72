#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mm/bignum.hpp"

namespace mm::dioph {

// C(n, k) is odd iff every 1-bit of k is also a 1-bit of n.
int lucas_parity(const Natural& n, const Natural& k);

// Parity of C(n, k) from the exact Pascal triangle; independent of
// lucas_parity. Throws ParameterOutOfRange for n > 4096.
int binomial_parity_oracle(unsigned n, unsigned k);
// Row n of Pascal's triangle, exact.
std::vector<Natural> pascal_row(unsigned n);

inline constexpr unsigned kPascalGuard = 4096;

struct MJWitness {
  unsigned N = 0, K = 0;
  Natural b, x, y, z, u, v, w;

  // The five equations, checked exactly.
  bool satisfies() const;
  friend bool operator==(const MJWitness&, const MJWitness&) = default;
};

// Reads the unknowns off the base-b digits of (b+1)^N with b = 2^N. Returns
// nullopt when digit K (the coefficient C(N, K)) is even. Throws
// ParameterOutOfRange unless N >= 1 and K <= N.
std::optional<MJWitness> mj_witness(unsigned N, unsigned K);

struct UniquenessReport {
  bool unique = false;  // solutions == {constructed witness}, or both empty
  std::vector<MJWitness> solutions;
  std::uint64_t candidates = 0;
};

inline constexpr unsigned kUniquenessMaxN = 6;

// Exhaustive search over every natural solution of the five equations. The
// linear equations pin u, v, w and one of x or z, so the search walks y and
// the smaller of the x and z ranges; `radius` optionally caps both walks.
// Throws ParameterOutOfRange for N > 6.
UniquenessReport mj_uniqueness_check(unsigned N, unsigned K, std::optional<std::uint64_t> radius = std::nullopt);

}  // namespace mm::dioph
