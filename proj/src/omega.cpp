#include "mm/omega.hpp"

#include "mm/error.hpp"

namespace mm::omega {

// ---------------------------------------------------------------------------
// Dyadic

Dyadic::Dyadic(Natural numerator, std::uint64_t exponent) : numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto twos = mpz_scan1(numerator_.get_mpz_t(), 0);
  const auto shift = std::min<std::uint64_t>(twos, exponent_);
  numerator_ >>= static_cast<mp_bitcnt_t>(shift);
  exponent_ -= shift;
}

Rational Dyadic::to_rational() const { return make_rational(numerator_, pow2(exponent_)); }

std::string Dyadic::str() const {
  if (exponent_ == 0) return numerator_.get_str();
  return numerator_.get_str() + "/2^" + std::to_string(exponent_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const std::uint64_t e = std::max(a.exponent_, b.exponent_);
  Natural n = (a.numerator_ << static_cast<mp_bitcnt_t>(e - a.exponent_)) +
              (b.numerator_ << static_cast<mp_bitcnt_t>(e - b.exponent_));
  return Dyadic(std::move(n), e);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const std::uint64_t e = std::max(a.exponent_, b.exponent_);
  const Natural x = a.numerator_ << static_cast<mp_bitcnt_t>(e - a.exponent_);
  const Natural y = b.numerator_ << static_cast<mp_bitcnt_t>(e - b.exponent_);
  const int c = cmp(x, y);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Approximations

namespace {

// Bodies of l bits encode to 2l + 2 bits.
std::optional<unsigned> max_body_for_encoded(std::uint64_t encoded_bits) {
  if (encoded_bits < 2) return std::nullopt;
  return static_cast<unsigned>(std::min<std::uint64_t>((encoded_bits - 2) / 2, 1u << 20));
}

Dyadic mass_of(std::uint64_t count, unsigned body_length) { return Dyadic(Natural(count), 2ull * body_length + 2); }

void check_guard(unsigned body_length, const Enumeration& e) {
  if (body_length > e.guard) {
    throw Error(Errc::PrecisionTooLarge, "enumerating " + std::to_string(body_length) +
                                             "-bit bodies exceeds the guard of " + std::to_string(e.guard));
  }
}

}  // namespace

ApproxReport omega_approx(std::uint64_t n, const Enumeration& e, bool list_programs) {
  ApproxReport report;
  report.n = n;
  const auto max_body = max_body_for_encoded(n);
  if (!max_body) return report;
  check_guard(*max_body, e);
  const kernels::HaltMode mode{n};
  for (unsigned l = 0; l <= *max_body; ++l) {
    if (list_programs) {
      const auto records = kernels::collect_halting(l, mode, e);
      for (const auto& r : records) {
        report.halted_programs.push_back({BitString::from_uint(r.index, l), r.output, r.steps});
      }
      report.value = report.value + mass_of(records.size(), l);
    } else {
      report.value = report.value + mass_of(kernels::count_halting(l, mode, e), l);
    }
  }
  return report;
}

Dyadic approx_value(std::uint64_t n, const Enumeration& e) { return omega_approx(n, e, false).value; }

Dyadic kraft_mass(const std::vector<HaltedProgram>& programs) {
  Dyadic total;
  for (const auto& p : programs) total = total + Dyadic(Natural(1), p.encoded_length());
  return total;
}

Dyadic kraft_sum(std::uint64_t n, const Enumeration& e) { return kraft_mass(omega_approx(n, e).halted_programs); }

// ---------------------------------------------------------------------------
// Exact intervals and certified bits

std::uint64_t OmegaCertifier::halting_at(unsigned length) {
  while (census_.size() <= length) {
    const auto l = static_cast<unsigned>(census_.size());
    census_.push_back(kernels::count_halting(l, kernels::HaltMode{}, enumeration_));
  }
  return census_[length];
}

OmegaInterval OmegaCertifier::interval(unsigned body_cutoff) {
  check_guard(body_cutoff, enumeration_);
  OmegaInterval iv;
  iv.body_cutoff = body_cutoff;
  for (unsigned l = 0; l <= body_cutoff; ++l) iv.lo = iv.lo + mass_of(halting_at(l), l);
  // Lengths above the cutoff hold 2^l bodies of weight 2^-(2l+2) each:
  // a geometric tail of exactly 2^-(cutoff+2).
  iv.hi = iv.lo + Dyadic(Natural(1), body_cutoff + 2);
  return iv;
}

OmegaInterval omega_exact(unsigned body_cutoff, const Enumeration& e) {
  return OmegaCertifier(e).interval(body_cutoff);
}

std::optional<Natural> common_scaled_floor(const Rational& lo, const Rational& hi, unsigned n) {
  const Rational scale(pow2(n));
  const Natural floor_lo = floor_of(lo * scale);
  const Rational hi_scaled = hi * scale;
  // ceil(hi * 2^n) - 1 == floor_lo  <=>  hi * 2^n <= floor_lo + 1
  if (hi_scaled <= Rational(floor_lo + 1)) return floor_lo;
  return std::nullopt;
}

std::optional<unsigned> OmegaCertifier::certifying_cutoff(unsigned n) {
  for (unsigned l = 0; l <= enumeration_.guard; ++l) {
    const auto iv = interval(l);
    if (common_scaled_floor(iv.lo.to_rational(), iv.hi.to_rational(), n)) return l;
  }
  return std::nullopt;
}

Natural OmegaCertifier::scaled_floor(unsigned n) {
  const auto cutoff = certifying_cutoff(n);
  if (!cutoff) {
    throw Error(Errc::Uncertifiable, "no interval with body cutoff <= " + std::to_string(enumeration_.guard) +
                                         " isolates bit " + std::to_string(n));
  }
  const auto iv = interval(*cutoff);
  return *common_scaled_floor(iv.lo.to_rational(), iv.hi.to_rational(), n);
}

std::optional<int> OmegaCertifier::try_bit(unsigned n) {
  if (n == 0) throw Error(Errc::ParameterOutOfRange, "bits are numbered from 1");
  if (!certifying_cutoff(n)) return std::nullopt;
  return mpz_tstbit(scaled_floor(n).get_mpz_t(), 0);
}

int OmegaCertifier::bit(unsigned n) {
  if (auto b = try_bit(n)) return *b;
  throw Error(Errc::Uncertifiable, "bit " + std::to_string(n) + " is not certifiable within the guard");
}

int omega_bit(unsigned n, const Enumeration& e) { return OmegaCertifier(e).bit(n); }

Natural ord_kieu_count(unsigned n, const Enumeration& e) {
  OmegaCertifier cert(e);
  // Program(n, k) halts iff k > 0 and some approximation exceeds k / 2^n,
  // i.e. iff 0 < k < 2^n * Omega. Omega_M lies strictly above every lower
  // endpoint, so the halting k are exactly 1..floor(2^n * Omega).
  return cert.scaled_floor(n);
}

machine::HaltVerdict chaitin_bit_predicate(unsigned n, std::uint64_t k, const Enumeration& e) {
  if (n == 0 || k == 0) throw Error(Errc::ParameterOutOfRange, "chaitin_bit_predicate needs n >= 1 and k >= 1");
  auto verdict = [](bool bit) { return bit ? machine::HaltVerdict::halts(0, 0) : machine::HaltVerdict::diverges(); };
  const Rational scale(pow2(n));

  const auto max_body = max_body_for_encoded(k);
  if (!max_body || *max_body <= e.guard) {
    const Natural f = floor_of(approx_value(k, e).to_rational() * scale);
    return verdict(mpz_tstbit(f.get_mpz_t(), 0) != 0);
  }
  // approx(j) <= approx(k) <= Omega_M < hi for every j <= k: if one cell of
  // width 2^-n holds both ends, the bit of approx(k) is that cell's bit.
  OmegaCertifier cert(e);
  for (unsigned l = 0; l <= e.guard; ++l) {
    const Rational lower = approx_value(2ull * l + 2, e).to_rational();
    const Rational upper = cert.interval(l).hi.to_rational();
    if (auto f = common_scaled_floor(lower, upper, n)) return verdict(mpz_tstbit(f->get_mpz_t(), 0) != 0);
  }
  throw Error(Errc::Uncertifiable, "bit " + std::to_string(n) + " of approximation " + std::to_string(k) +
                                       " is not determined within the guard");
}

}  // namespace mm::omega
