#include "mm/diophantine.hpp"

#include "mm/error.hpp"

namespace mm::dioph {

int lucas_parity(const Natural& n, const Natural& k) {
  // k AND NOT n, with both padded on the left by zeros.
  Natural outside;
  mpz_com(outside.get_mpz_t(), n.get_mpz_t());
  outside &= k;
  return outside == 0 ? 1 : 0;
}

std::vector<Natural> pascal_row(unsigned n) {
  if (n > kPascalGuard) throw Error(Errc::ParameterOutOfRange, "Pascal oracle limited to n <= 4096");
  std::vector<Natural> row{1};
  row.reserve(n + 1);
  for (unsigned r = 1; r <= n; ++r) {
    row.push_back(1);
    for (unsigned i = r - 1; i > 0; --i) row[i] += row[i - 1];
  }
  return row;
}

int binomial_parity_oracle(unsigned n, unsigned k) {
  if (k > n) {
    if (n > kPascalGuard) throw Error(Errc::ParameterOutOfRange, "Pascal oracle limited to n <= 4096");
    return 0;
  }
  return mpz_odd_p(pascal_row(n)[k].get_mpz_t()) ? 1 : 0;
}

bool MJWitness::satisfies() const {
  const unsigned long k = K;
  return b == pow2(N) &&
         upow(b + 1, N) == x * upow(b, k + 1) + y * upow(b, k) + z &&
         z + u + 1 == upow(b, k) &&
         y + v + 1 == b &&
         y == 2 * w + 1;
}

namespace {

void check_parameters(unsigned N, unsigned K) {
  if (N < 1 || K > N) {
    throw Error(Errc::ParameterOutOfRange, "need N >= 1 and 0 <= K <= N, got N=" + std::to_string(N) +
                                               " K=" + std::to_string(K));
  }
}

}  // namespace

std::optional<MJWitness> mj_witness(unsigned N, unsigned K) {
  check_parameters(N, K);
  MJWitness m;
  m.N = N;
  m.K = K;
  m.b = pow2(N);
  const Natural big = upow(m.b + 1, N);
  const Natural low = upow(m.b, K);
  m.z = big % low;
  const Natural high = big / low;
  m.y = high % m.b;
  m.x = high / m.b;
  if (mpz_even_p(m.y.get_mpz_t())) return std::nullopt;
  m.u = low - m.z - 1;
  m.v = m.b - m.y - 1;
  m.w = (m.y - 1) / 2;
  if (!m.satisfies()) throw std::logic_error("digit extraction produced a non-solution");
  return m;
}

UniquenessReport mj_uniqueness_check(unsigned N, unsigned K, std::optional<std::uint64_t> radius) {
  check_parameters(N, K);
  if (N > kUniquenessMaxN) throw Error(Errc::ParameterOutOfRange, "exhaustive search limited to N <= 6");

  const std::uint64_t b = std::uint64_t{1} << N;
  const Natural bb(static_cast<unsigned long>(b));
  const Natural big = upow(bb + 1, N);
  const Natural bK = upow(bb, K);
  const Natural bK1 = bK * bb;
  const Natural x_max = big / bK1;  // x * b^(K+1) <= (b+1)^N
  auto cap = [&](const Natural& count) {
    Natural c = count;
    if (radius && c > Natural(static_cast<unsigned long>(*radius))) c = static_cast<unsigned long>(*radius);
    return c.get_ui();
  };
  const bool walk_x = x_max + 1 <= bK;
  const std::uint64_t walk = walk_x ? cap(x_max + 1) : cap(bK);
  const std::uint64_t y_walk = cap(bb);

  UniquenessReport report;
  auto record = [&](const Natural& x, std::uint64_t y, const Natural& z) {
    if (z < 0 || z >= bK || x < 0) return;
    if (y % 2 == 0) return;  // y = 2w + 1 has no natural w
    MJWitness m;
    m.N = N;
    m.K = K;
    m.b = bb;
    m.x = x;
    m.y = static_cast<unsigned long>(y);
    m.z = z;
    m.u = bK - z - 1;
    m.v = static_cast<unsigned long>(b - y - 1);
    m.w = static_cast<unsigned long>((y - 1) / 2);
    if (m.satisfies()) report.solutions.push_back(std::move(m));
  };

  for (std::uint64_t y = 0; y < y_walk; ++y) {
    const Natural rest = big - Natural(static_cast<unsigned long>(y)) * bK;
    for (std::uint64_t i = 0; i < walk; ++i) {
      ++report.candidates;
      const Natural t(static_cast<unsigned long>(i));
      if (walk_x) {
        record(t, y, rest - t * bK1);
      } else {
        const Natural r = rest - t;
        if (r >= 0 && mpz_divisible_p(r.get_mpz_t(), bK1.get_mpz_t())) record(r / bK1, y, t);
      }
    }
  }

  const auto constructed = mj_witness(N, K);
  report.unique = constructed ? report.solutions.size() == 1 && report.solutions.front() == *constructed
                              : report.solutions.empty();
  return report;
}

}  // namespace mm::dioph
