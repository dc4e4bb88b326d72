#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mm/codec.hpp"

namespace mm::machine {

// Two-bit instruction set. A trailing odd bit in the body is an implicit
// Halt; running past the last instruction also halts.
enum class Opcode : std::uint8_t {
  Inc = 0b00,   // reg += 1
  Dec = 0b01,   // reg = max(reg - 1, 0)
  Jnz = 0b10,   // if reg != 0 goto instruction 0
  Halt = 0b11,
};

// Longest body an integer index can describe.
inline constexpr unsigned kMaxIndexedBodyBits = 64;

// A self-delimiting program: the DOUBLED codeword of its body.
class ToyProgram {
 public:
  // Throws NotSelfDelimiting unless `encoded` is exactly one doubled codeword.
  static ToyProgram load(const BitString& encoded);
  static ToyProgram from_body(BitString body);
  // Body given as the low `length` bits of `bits`, most significant first.
  static ToyProgram from_index(std::uint64_t bits, unsigned length);

  const BitString& encoded() const noexcept { return encoded_; }
  const BitString& body() const noexcept { return body_; }
  const std::vector<Opcode>& ops() const noexcept { return ops_; }

 private:
  BitString encoded_;
  BitString body_;
  std::vector<Opcode> ops_;
};

struct HaltVerdict {
  enum class Kind { Halts, Diverges, Unknown };

  Kind kind = Kind::Unknown;
  std::uint64_t output = 0;  // Halts only
  std::uint64_t steps = 0;   // Halts only
  std::uint64_t budget = 0;  // Unknown only

  static HaltVerdict halts(std::uint64_t output, std::uint64_t steps) { return {Kind::Halts, output, steps, 0}; }
  static HaltVerdict diverges() { return {Kind::Diverges, 0, 0, 0}; }
  static HaltVerdict unknown(std::uint64_t budget) { return {Kind::Unknown, 0, 0, budget}; }

  bool is_halt() const noexcept { return kind == Kind::Halts; }
  friend bool operator==(const HaltVerdict&, const HaltVerdict&) = default;
};

std::string to_string(const HaltVerdict& v);

// Splits a body into opcodes.
std::vector<Opcode> decode_ops(const BitString& body);

// Simulation with a step budget. Each executed opcode (Halt included) is one
// step; falling off the end costs nothing.
HaltVerdict run_budgeted(std::span<const Opcode> ops, std::uint64_t budget);
HaltVerdict run_budgeted(const ToyProgram& p, std::uint64_t budget);

// Exact decision, never Unknown. Because every jump targets instruction 0,
// one pass from pc = 0 is a function of the register alone; the decider
// iterates that function, reporting divergence on a repeated register value
// or on unbounded growth past the saturation bound.
HaltVerdict decide_halting(std::span<const Opcode> ops);
HaltVerdict decide_halting(const ToyProgram& p);

// Fixed-size decoding of a body given as an integer, for enumeration loops.
// Returns the instruction count written into `out`.
std::size_t ops_from_index(std::uint64_t bits, unsigned length, Opcode* out) noexcept;

}  // namespace mm::machine
