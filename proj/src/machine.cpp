#include "mm/machine.hpp"

#include <algorithm>
#include <array>

#include "mm/error.hpp"

namespace mm::machine {

ToyProgram ToyProgram::load(const BitString& encoded) {
  codec::Decoded d;
  try {
    d = codec::decode(codec::Scheme::Doubled, encoded);
  } catch (const Error& e) {
    throw Error(Errc::NotSelfDelimiting, e.what());
  }
  if (!d.remainder.empty()) throw Error(Errc::NotSelfDelimiting, "bits after the codeword: " + d.remainder.str());
  // Only the 01 terminator is canonical; 10 would give a second encoding.
  if (!encoded[encoded.size() - 1]) throw Error(Errc::NotSelfDelimiting, "program must end with terminator 01");
  return from_body(std::move(d.payload));
}

ToyProgram ToyProgram::from_body(BitString body) {
  ToyProgram p;
  p.encoded_ = codec::encode_doubled(body);
  p.ops_ = decode_ops(body);
  p.body_ = std::move(body);
  return p;
}

ToyProgram ToyProgram::from_index(std::uint64_t bits, unsigned length) {
  return from_body(BitString::from_uint(bits, length));
}

std::string to_string(const HaltVerdict& v) {
  switch (v.kind) {
    case HaltVerdict::Kind::Halts: return "HALTS " + std::to_string(v.output) + " " + std::to_string(v.steps);
    case HaltVerdict::Kind::Diverges: return "DIVERGES";
    case HaltVerdict::Kind::Unknown: return "UNKNOWN " + std::to_string(v.budget);
  }
  return "?";
}

std::vector<Opcode> decode_ops(const BitString& body) {
  std::vector<Opcode> ops;
  ops.reserve(body.size() / 2 + 1);
  std::size_t i = 0;
  for (; i + 1 < body.size(); i += 2) {
    ops.push_back(static_cast<Opcode>((body[i] ? 2 : 0) | (body[i + 1] ? 1 : 0)));
  }
  if (i < body.size()) ops.push_back(Opcode::Halt);
  return ops;
}

std::size_t ops_from_index(std::uint64_t bits, unsigned length, Opcode* out) noexcept {
  std::size_t n = 0;
  unsigned remaining = length;
  while (remaining >= 2) {
    remaining -= 2;
    out[n++] = static_cast<Opcode>((bits >> remaining) & 0b11u);
  }
  if (remaining == 1) out[n++] = Opcode::Halt;
  return n;
}

HaltVerdict run_budgeted(std::span<const Opcode> ops, std::uint64_t budget) {
  std::size_t pc = 0;
  std::uint64_t reg = 0;
  std::uint64_t steps = 0;
  for (;;) {
    if (pc == ops.size()) return HaltVerdict::halts(reg, steps);
    if (steps == budget) return HaltVerdict::unknown(budget);
    ++steps;
    switch (ops[pc]) {
      case Opcode::Inc: ++reg; ++pc; break;
      case Opcode::Dec: if (reg != 0) --reg; ++pc; break;
      case Opcode::Jnz: pc = reg != 0 ? 0 : pc + 1; break;
      case Opcode::Halt: return HaltVerdict::halts(reg, steps);
    }
  }
}

HaltVerdict run_budgeted(const ToyProgram& p, std::uint64_t budget) { return run_budgeted(p.ops(), budget); }

namespace {

// Net register change of a pass that never saturates, and whether such a
// pass loops back (reaches a Jnz before any Halt or the end).
struct FreePass {
  bool loops = false;
  std::int64_t delta = 0;
};

FreePass free_pass(std::span<const Opcode> ops) {
  FreePass f;
  for (Opcode op : ops) {
    switch (op) {
      case Opcode::Inc: ++f.delta; break;
      case Opcode::Dec: --f.delta; break;
      case Opcode::Jnz: f.loops = true; return f;
      case Opcode::Halt: return f;
    }
  }
  return f;
}

}  // namespace

HaltVerdict decide_halting(std::span<const Opcode> ops) {
  const auto saturation = static_cast<std::uint64_t>(std::count(ops.begin(), ops.end(), Opcode::Dec));
  const FreePass free = free_pass(ops);

  // Register values at pc = 0 never exceed saturation + ops.size().
  const std::size_t limit = static_cast<std::size_t>(saturation) + ops.size() + 1;
  std::array<bool, 256> seen_small{};
  std::vector<bool> seen_large;
  if (limit > seen_small.size()) seen_large.resize(limit);
  auto mark = [&](std::uint64_t r) {
    if (seen_large.empty()) {
      const bool was = seen_small[r];
      seen_small[r] = true;
      return was;
    }
    const bool was = seen_large[r];
    seen_large[r] = true;
    return was;
  };

  std::uint64_t reg = 0;
  std::uint64_t steps = 0;
  for (;;) {
    if (mark(reg)) return HaltVerdict::diverges();
    if (reg > saturation && free.loops && free.delta >= 0) return HaltVerdict::diverges();

    std::size_t pc = 0;
    for (;;) {
      if (pc == ops.size()) return HaltVerdict::halts(reg, steps);
      ++steps;
      const Opcode op = ops[pc];
      if (op == Opcode::Halt) return HaltVerdict::halts(reg, steps);
      if (op == Opcode::Jnz) {
        if (reg != 0) break;
        ++pc;
        continue;
      }
      if (op == Opcode::Inc) {
        ++reg;
      } else if (reg != 0) {
        --reg;
      }
      ++pc;
    }
  }
}

HaltVerdict decide_halting(const ToyProgram& p) { return decide_halting(p.ops()); }

}  // namespace mm::machine
