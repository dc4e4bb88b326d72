#include <algorithm>
#include <array>

#include "mm/kernels.hpp"
#include "mm/machine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mm::kernels {

namespace {

using machine::HaltVerdict;
using machine::Opcode;

HaltVerdict verdict_for(std::uint64_t index, unsigned length, const HaltMode& mode) {
  std::array<Opcode, machine::kMaxIndexedBodyBits / 2 + 1> ops;
  const std::size_t n = machine::ops_from_index(index, length, ops.data());
  const std::span<const Opcode> view(ops.data(), n);
  return mode.budget ? machine::run_budgeted(view, *mode.budget) : machine::decide_halting(view);
}

std::uint64_t body_count(unsigned length) { return std::uint64_t{1} << length; }

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : default_jobs(); }

}  // namespace

int default_jobs() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::uint64_t count_halting_serial(unsigned body_length, HaltMode mode) {
  std::uint64_t halting = 0;
  const std::uint64_t total = body_count(body_length);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (verdict_for(i, body_length, mode).is_halt()) ++halting;
  }
  return halting;
}

std::uint64_t count_halting_parallel(unsigned body_length, HaltMode mode, int jobs) {
  const auto total = static_cast<std::int64_t>(body_count(body_length));
  std::uint64_t halting = 0;
#pragma omp parallel for num_threads(resolve_jobs(jobs)) schedule(static) reduction(+ : halting)
  for (std::int64_t i = 0; i < total; ++i) {
    if (verdict_for(static_cast<std::uint64_t>(i), body_length, mode).is_halt()) ++halting;
  }
  return halting;
}

std::vector<HaltRecord> collect_halting_serial(unsigned body_length, HaltMode mode, const OutputFilter& keep) {
  std::vector<HaltRecord> out;
  const std::uint64_t total = body_count(body_length);
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto v = verdict_for(i, body_length, mode);
    if (v.is_halt() && (!keep || keep(v.output))) out.push_back({i, v.output, v.steps});
  }
  return out;
}

std::vector<HaltRecord> collect_halting_parallel(unsigned body_length, HaltMode mode, int jobs,
                                                 const OutputFilter& keep) {
  const std::uint64_t total = body_count(body_length);
  const int threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_jobs(jobs)), total));
  // One contiguous chunk per thread, concatenated in chunk order.
  std::vector<std::vector<HaltRecord>> parts(static_cast<std::size_t>(threads));
#pragma omp parallel for num_threads(threads) schedule(static, 1)
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(threads);
    const std::uint64_t end = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(threads);
    auto& part = parts[static_cast<std::size_t>(t)];
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto v = verdict_for(i, body_length, mode);
      if (v.is_halt() && (!keep || keep(v.output))) part.push_back({i, v.output, v.steps});
    }
  }
  std::vector<HaltRecord> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace mm::kernels

namespace mm::kernels {

std::uint64_t count_halting(unsigned body_length, HaltMode mode, const Enumeration& e) {
  return e.serial ? count_halting_serial(body_length, mode) : count_halting_parallel(body_length, mode, e.jobs);
}

std::vector<HaltRecord> collect_halting(unsigned body_length, HaltMode mode, const Enumeration& e,
                                        const OutputFilter& keep) {
  return e.serial ? collect_halting_serial(body_length, mode, keep)
                  : collect_halting_parallel(body_length, mode, e.jobs, keep);
}

}  // namespace mm::kernels
