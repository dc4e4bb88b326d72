#include <doctest.h>

#include <random>
#include <string>

#include "mm/codec.hpp"
#include "mm/error.hpp"

using mm::BitString;
using mm::Errc;
using namespace mm::codec;

namespace {

BitString bits(std::string spaced) {
  std::erase(spaced, ' ');
  return BitString(spaced);
}

BitString random_bits(std::mt19937_64& rng, std::size_t max_len) {
  BitString b;
  const auto len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) b.push_back(rng() & 1);
  return b;
}

Errc decode_error(Scheme s, const std::string& stream) {
  try {
    decode(s, bits(stream));
  } catch (const mm::Error& e) {
    return e.code();
  }
  FAIL("expected a decode error for: " << stream);
  return Errc::Malformed;
}

// Independent length model: the numeral of n has floor(log2 n) + 1 digits.
std::size_t numeral_digits(std::size_t n) {
  std::size_t d = 1;
  while (n >>= 1) ++d;
  return d;
}

constexpr Scheme kSchemes[] = {Scheme::Doubled, Scheme::Header, Scheme::TwoHeader};

}  // namespace

TEST_SUITE("codec") {

TEST_CASE("doubled encoding") {
  CHECK(encode_doubled(bits("011100")) == bits("00 11 11 11 00 00 01"));
  CHECK(encode_doubled(BitString()) == bits("01"));
  CHECK(encode_doubled(bits("1010")) == bits("11 00 11 00 01"));
}

TEST_CASE("header encoding") {
  CHECK(encode_header(bits("011100")) == bits("11 11 00 01 011100"));
  CHECK(encode_header(BitString()) == bits("00 01"));
  CHECK(encode_header(bits("1")) == bits("11 01 1"));
}

TEST_CASE("two-header encoding") {
  CHECK(encode_two_header(bits("011100")) == bits("11 11 01 110 011100"));
  // Empty payload: length numeral "0", whose own length 1 is doubled.
  CHECK(encode_two_header(BitString()) == bits("11 01 0"));
  // Length 4 = "100", three digits = "11" doubled.
  CHECK(encode_two_header(bits("1010")) == bits("11 11 01 100 1010"));
  CHECK(decode(Scheme::TwoHeader, bits("11 11 01 100 1010")).payload == bits("1010"));
}

TEST_CASE("decoding worked streams") {
  const auto first = decode(Scheme::Doubled, bits("00 11 11 11 00 00 01 11 00 11 00 10"));
  CHECK(first.payload == bits("011100"));
  const auto second = decode(Scheme::Doubled, first.remainder);
  CHECK(second.payload == bits("1010"));
  CHECK(second.remainder.empty());
  CHECK(decode_all(Scheme::Doubled, bits("00 11 11 11 00 00 01 11 00 11 00 10")) ==
        std::vector<BitString>{bits("011100"), bits("1010")});

  const auto empty = decode(Scheme::Doubled, bits("01"));
  CHECK(empty.payload.empty());
  CHECK(empty.remainder.empty());

  const auto h = decode(Scheme::Header, bits("11 11 00 01 011100"));
  CHECK(h.payload == bits("011100"));
  CHECK(h.remainder.empty());
}

TEST_CASE("all three schemes round-trip the worked payload") {
  for (Scheme s : kSchemes) {
    const auto d = decode(s, encode(s, bits("011100")));
    CHECK(d.payload == bits("011100"));
    CHECK(d.remainder.empty());
  }
}

TEST_CASE("decode errors") {
  CHECK(decode_error(Scheme::Doubled, "000") == Errc::Truncated);
  CHECK(decode_error(Scheme::Doubled, "") == Errc::Truncated);
  CHECK(decode_error(Scheme::Doubled, "0011") == Errc::Truncated);
  CHECK(decode_error(Scheme::Header, "1101") == Errc::Truncated);
  CHECK(decode_error(Scheme::Header, "0000 01") == Errc::Malformed);  // numeral 00
  CHECK(decode_error(Scheme::TwoHeader, "01") == Errc::Malformed);    // zero-width numeral
  CHECK(decode_error(Scheme::TwoHeader, "1101") == Errc::Truncated);
  CHECK(decode_error(Scheme::TwoHeader, "1111 01 01 00") == Errc::Malformed);  // numeral "01"
}

TEST_CASE("exact length formulas for payload lengths 0..256") {
  for (std::size_t n = 0; n <= 256; ++n) {
    const BitString p = BitString::from_uint(0, 0) + BitString(std::string(n, '1'));
    const auto d = numeral_digits(n);
    CHECK(encode_doubled(p).size() == 2 * n + 2);
    CHECK(encode_header(p).size() == 2 * d + 2 + n);
    CHECK(encode_two_header(p).size() == 2 * numeral_digits(d) + 2 + d + n);
  }
}

TEST_CASE("length ordering for long payloads") {
  // header beats doubled from nine bits on; two-header beats header exactly
  // when the doubled header of the length would cost more than the two
  // headers, i.e. 2 * digits(digits(n)) < digits(n).
  for (std::size_t n = 8; n <= 1024; ++n) {
    const BitString p(std::string(n, '0'));
    const auto dbl = encode_doubled(p).size(), hdr = encode_header(p).size(), two = encode_two_header(p).size();
    if (n >= 9) CHECK(hdr < dbl);
    const auto d = numeral_digits(n);
    CHECK((two < hdr) == (2 * numeral_digits(d) < d));
  }
  // The two-header scheme wins for every n >= 256.
  for (std::size_t n : {256u, 300u, 1000u, 4096u, 65536u}) {
    const BitString p(std::string(n, '1'));
    CHECK(encode_two_header(p).size() < encode_header(p).size());
    CHECK(encode_header(p).size() < encode_doubled(p).size());
  }
}

TEST_CASE("fuzzed round trips, additivity and prefix-freeness") {
  const std::uint64_t seed = 424242;
  MESSAGE("seed " << seed);
  std::mt19937_64 rng(seed);
  for (Scheme s : kSchemes) {
    for (int i = 0; i < 3000; ++i) {
      const BitString p = random_bits(rng, 40);
      const BitString junk = random_bits(rng, 10);
      const auto d = decode(s, encode(s, p) + junk);
      REQUIRE(d.payload == p);
      REQUIRE(d.remainder == junk);

      const BitString q = random_bits(rng, 40);
      if (p != q) {
        CHECK_FALSE(encode(s, p).starts_with(encode(s, q)));
        CHECK_FALSE(encode(s, q).starts_with(encode(s, p)));
      }
    }
    std::vector<BitString> messages;
    BitString stream;
    std::size_t total = 0;
    for (int i = 0; i < 20; ++i) {
      messages.push_back(random_bits(rng, 30));
      const auto e = encode(s, messages.back());
      stream += e;
      total += e.size();
    }
    CHECK(stream.size() == total);
    CHECK(decode_all(s, stream) == messages);
  }
}

TEST_CASE("doubled decoder accepts both terminators") {
  CHECK(decode(Scheme::Doubled, bits("11 10")).payload == bits("1"));
  CHECK(decode(Scheme::Doubled, bits("11 01")).payload == bits("1"));
}

TEST_CASE("binary numerals") {
  CHECK(mm::number_to_bits(22) == bits("10110"));
  CHECK(mm::number_to_bits(0) == bits("0"));
  CHECK(mm::number_to_bits(1024) == bits("10000000000"));
  CHECK(mm::bits_to_number(bits("10110")) == 22);
  CHECK(mm::bits_to_number(bits("00010110")) == 22);
  CHECK(mm::bits_to_number(bits("0")) == 0);
  CHECK_THROWS_AS(mm::bits_to_number(BitString()), mm::Error);
  CHECK_THROWS_AS(BitString("012"), mm::Error);
  for (unsigned long n = 0; n < 2000; ++n) CHECK(mm::bits_to_number(mm::number_to_bits(n)) == n);
  CHECK(mm::numeral_length(0) == 1);
  CHECK(mm::numeral_length(1) == 1);
  CHECK(mm::numeral_length(255) == 8);
  CHECK(mm::numeral_length(256) == 9);
}

TEST_CASE("text as a number") {
  CHECK(mm::text_to_number("A") == 321);
  CHECK(mm::text_to_number("") == 1);
  CHECK(mm::number_to_text(321) == "A");
  CHECK(mm::number_to_text(1).empty());
  CHECK(mm::number_to_text(mm::text_to_number("Meta Math!")) == "Meta Math!");
  CHECK_THROWS_AS(mm::number_to_text(0), mm::Error);
  CHECK_THROWS_AS(mm::number_to_text(2), mm::Error);           // "10": leftover bit
  CHECK_THROWS_AS(mm::number_to_text(256 + 200), mm::Error);   // octet 200 is not ASCII
  CHECK_THROWS_AS(mm::text_to_number("\xc3\xa9"), mm::Error);
}

}  // TEST_SUITE
