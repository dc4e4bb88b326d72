#include "mm/complexity.hpp"

#include <cmath>
#include <set>

#include "mm/error.hpp"

namespace mm::complexity {

namespace {

// Longest body inside `bound` encoded bits, or nullopt if nothing fits.
std::optional<unsigned> body_limit(std::uint64_t bound, const Enumeration& e) {
  if (bound < 2) return std::nullopt;
  const std::uint64_t l = (bound - 2) / 2;
  if (l > e.guard) {
    throw Error(Errc::BoundTooLarge, "bound " + std::to_string(bound) + " needs " + std::to_string(l) +
                                         "-bit bodies; guard is " + std::to_string(e.guard));
  }
  return static_cast<unsigned>(l);
}

}  // namespace

ComplexityRecord h_of(std::uint64_t target, std::uint64_t bound, const SearchOptions& opts) {
  ComplexityRecord rec;
  rec.target = target;
  rec.search_bound = bound;
  const auto limit = body_limit(bound, opts.enumeration);
  if (!limit) return rec;
  for (unsigned l = 0; l <= *limit; ++l) {
    const auto hits = kernels::collect_halting(l, opts.mode, opts.enumeration,
                                               [target](std::uint64_t out) { return out == target; });
    if (!hits.empty()) {
      rec.witness = machine::ToyProgram::from_index(hits.front().index, l);
      rec.h = rec.witness->encoded().size();
      return rec;
    }
  }
  return rec;
}

std::vector<ElegantProgram> elegant_programs(std::uint64_t bound, const SearchOptions& opts) {
  std::vector<ElegantProgram> out;
  const auto limit = body_limit(bound, opts.enumeration);
  if (!limit) return out;
  std::set<std::uint64_t> produced;  // outputs of strictly shorter programs
  for (unsigned l = 0; l <= *limit; ++l) {
    const auto fresh = kernels::collect_halting(l, opts.mode, opts.enumeration,
                                                [&produced](std::uint64_t o) { return !produced.contains(o); });
    for (const auto& r : fresh) out.push_back({machine::ToyProgram::from_index(r.index, l), r.output, r.steps});
    for (const auto& r : fresh) produced.insert(r.output);
  }
  return out;
}

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  const auto s = static_cast<unsigned __int128>(x) + y;
  const unsigned __int128 p = s * (s + 1) / 2 + y;
  if (p > UINT64_MAX) throw Error(Errc::ParameterOutOfRange, "pair exceeds 64 bits");
  return static_cast<std::uint64_t>(p);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  // Largest w with w(w+1)/2 <= n; the float estimate is corrected exactly.
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(n) + 1) - 1) / 2);
  auto tri = [](std::uint64_t v) { return static_cast<unsigned __int128>(v) * (v + 1) / 2; };
  while (tri(w) > n) --w;
  while (tri(w + 1) <= n) ++w;
  const auto y = static_cast<std::uint64_t>(n - tri(w));
  return {w - y, y};
}

std::uint64_t symmetric_pair(std::uint64_t x, std::uint64_t y) { return cantor_pair(std::min(x, y), std::max(x, y)); }

MutualInformation mutual_information(std::uint64_t x, std::uint64_t y, std::uint64_t bound, Pairing pairing,
                                     const SearchOptions& opts) {
  MutualInformation mi;
  mi.paired = pairing == Pairing::Cantor ? cantor_pair(x, y) : symmetric_pair(x, y);
  auto need = [&](std::uint64_t target) {
    const auto rec = h_of(target, bound, opts);
    if (!rec.h) {
      throw Error(Errc::Unresolvable, "no program of at most " + std::to_string(bound) + " bits outputs " +
                                          std::to_string(target));
    }
    return *rec.h;
  };
  mi.h_x = need(x);
  mi.h_y = need(y);
  mi.h_xy = need(mi.paired);
  mi.value = static_cast<std::int64_t>(mi.h_x) + static_cast<std::int64_t>(mi.h_y) - static_cast<std::int64_t>(mi.h_xy);
  return mi;
}

}  // namespace mm::complexity
