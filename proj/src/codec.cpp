#include "mm/codec.hpp"

#include <bit>

#include "mm/error.hpp"

namespace mm {

BitString::BitString(std::string_view ascii) {
  bits_.reserve(ascii.size());
  for (char c : ascii) {
    if (c != '0' && c != '1') throw Error(Errc::Malformed, std::string("not a bit: '") + c + "'");
    bits_.push_back(c == '1');
  }
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
  BitString out;
  out.bits_.reserve(width);
  for (std::size_t i = width; i-- > 0;) out.bits_.push_back(i < 64 && ((value >> i) & 1u));
  return out;
}

BitString& BitString::operator+=(const BitString& tail) {
  bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end());
  return *this;
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  BitString out;
  if (pos >= bits_.size()) return out;
  const std::size_t end = len >= bits_.size() - pos ? bits_.size() : pos + len;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos), bits_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

bool BitString::starts_with(const BitString& prefix) const noexcept {
  if (prefix.size() > size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (bits_[i] != prefix.bits_[i]) return false;
  }
  return true;
}

std::string BitString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

BitString number_to_bits(const Natural& n) { return BitString(n.get_str(2)); }

Natural bits_to_number(const BitString& bits) {
  if (bits.empty()) throw Error(Errc::Malformed, "empty numeral");
  return Natural(bits.str(), 2);
}

std::size_t numeral_length(std::uint64_t n) noexcept {
  return n == 0 ? 1 : static_cast<std::size_t>(std::bit_width(n));
}

Natural text_to_number(std::string_view text) {
  std::string numeral = "1";
  for (char c : text) {
    const auto code = static_cast<unsigned char>(c);
    if (code > 127) throw Error(Errc::NotTextEncodable, "non-ASCII character");
    numeral += BitString::from_uint(code, 8).str();
  }
  return Natural(numeral, 2);
}

std::string number_to_text(const Natural& n) {
  if (n <= 0) throw Error(Errc::NotTextEncodable, "no leading marker bit");
  const std::string numeral = n.get_str(2);
  if ((numeral.size() - 1) % 8 != 0) {
    throw Error(Errc::NotTextEncodable, "numeral is not 1 followed by whole octets");
  }
  std::string out;
  for (std::size_t i = 1; i < numeral.size(); i += 8) {
    const auto code = std::stoul(numeral.substr(i, 8), nullptr, 2);
    if (code > 127) throw Error(Errc::NotTextEncodable, "octet " + numeral.substr(i, 8) + " is not ASCII");
    out.push_back(static_cast<char>(code));
  }
  return out;
}

namespace codec {

namespace {

// Reads the doubled region starting at `pos`; on return `pos` is just past
// the terminator.
BitString read_doubled(const BitString& s, std::size_t& pos) {
  BitString out;
  for (;;) {
    if (pos + 2 > s.size()) throw Error(Errc::Truncated, "stream ended inside a doubled region");
    const bool a = s[pos];
    const bool b = s[pos + 1];
    pos += 2;
    if (a != b) return out;
    out.push_back(a);
  }
}

std::uint64_t read_length_numeral(const BitString& numeral) {
  if (numeral.empty()) throw Error(Errc::Malformed, "empty length numeral");
  if (numeral.size() > 1 && !numeral[0]) throw Error(Errc::Malformed, "length numeral has a leading zero");
  if (numeral.size() > 63) throw Error(Errc::Malformed, "length numeral too large");
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < numeral.size(); ++i) n = (n << 1) | (numeral[i] ? 1u : 0u);
  return n;
}

BitString take(const BitString& s, std::size_t& pos, std::uint64_t count) {
  if (count > s.size() - pos) throw Error(Errc::Truncated, "stream ended inside a codeword");
  BitString out = s.slice(pos, static_cast<std::size_t>(count));
  pos += static_cast<std::size_t>(count);
  return out;
}

}  // namespace

std::string_view scheme_name(Scheme s) noexcept {
  switch (s) {
    case Scheme::Doubled: return "doubled";
    case Scheme::Header: return "header";
    case Scheme::TwoHeader: return "two-header";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "doubled") return Scheme::Doubled;
  if (name == "header") return Scheme::Header;
  if (name == "two-header") return Scheme::TwoHeader;
  throw Error(Errc::Malformed, "unknown scheme: " + std::string(name));
}

BitString encode_doubled(const BitString& payload) {
  BitString out;
  for (std::size_t i = 0; i < payload.size(); ++i) {
    out.push_back(payload[i]);
    out.push_back(payload[i]);
  }
  out.push_back(false);
  out.push_back(true);
  return out;
}

BitString encode_header(const BitString& payload) {
  return encode_doubled(number_to_bits(payload.size())) + payload;
}

BitString encode_two_header(const BitString& payload) {
  const BitString length = number_to_bits(payload.size());
  return encode_doubled(number_to_bits(length.size())) + length + payload;
}

BitString encode(Scheme scheme, const BitString& payload) {
  switch (scheme) {
    case Scheme::Doubled: return encode_doubled(payload);
    case Scheme::Header: return encode_header(payload);
    case Scheme::TwoHeader: return encode_two_header(payload);
  }
  return {};
}

Decoded decode(Scheme scheme, const BitString& stream) {
  std::size_t pos = 0;
  BitString payload;
  switch (scheme) {
    case Scheme::Doubled:
      payload = read_doubled(stream, pos);
      break;
    case Scheme::Header: {
      const auto n = read_length_numeral(read_doubled(stream, pos));
      payload = take(stream, pos, n);
      break;
    }
    case Scheme::TwoHeader: {
      const auto width = read_length_numeral(read_doubled(stream, pos));
      if (width == 0) throw Error(Errc::Malformed, "length numeral of width zero");
      const auto n = read_length_numeral(take(stream, pos, width));
      payload = take(stream, pos, n);
      break;
    }
  }
  return {std::move(payload), stream.slice(pos)};
}

std::vector<BitString> decode_all(Scheme scheme, const BitString& stream) {
  std::vector<BitString> out;
  BitString rest = stream;
  while (!rest.empty()) {
    auto d = decode(scheme, rest);
    out.push_back(std::move(d.payload));
    rest = std::move(d.remainder);
  }
  return out;
}

}  // namespace codec
}  // namespace mm
