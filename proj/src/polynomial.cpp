#include "mm/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "mm/error.hpp"

namespace mm::dioph {

NatPolynomial NatPolynomial::constant(const Natural& c) {
  NatPolynomial p;
  if (c > 0) p.terms_[{}] = c;
  return p;
}

NatPolynomial NatPolynomial::variable(const std::string& name) {
  NatPolynomial p;
  p.terms_[{{name, 1}}] = 1;
  return p;
}

NatPolynomial& NatPolynomial::operator+=(const NatPolynomial& other) {
  for (const auto& [mono, coeff] : other.terms_) terms_[mono] += coeff;
  return *this;
}

NatPolynomial operator*(const NatPolynomial& a, const NatPolynomial& b) {
  NatPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [var, e] : mb) m[var] += e;
      out.terms_[m] += ca * cb;
    }
  }
  return out;
}

NatPolynomial NatPolynomial::pow(unsigned exponent) const {
  NatPolynomial result = constant(1);
  NatPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Natural NatPolynomial::evaluate(const Assignment& at) const {
  Natural total = 0;
  for (const auto& [mono, coeff] : terms_) {
    Natural term = coeff;
    for (const auto& [var, e] : mono) {
      const auto it = at.find(var);
      if (it == at.end()) throw Error(Errc::ParameterOutOfRange, "no value for variable " + var);
      term *= upow(it->second, e);
    }
    total += term;
  }
  return total;
}

std::set<std::string> NatPolynomial::variables() const {
  std::set<std::string> vars;
  for (const auto& [mono, coeff] : terms_) {
    for (const auto& [var, e] : mono) vars.insert(var);
  }
  return vars;
}

bool NatPolynomial::subtraction_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
  auto degree = [](const Monomial& m) {
    unsigned long d = 0;
    for (const auto& [var, e] : m) d += e;
    return d;
  };
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da > db;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    // The alphabetically smaller variable present in only one side gives that
    // side the larger exponent at that position.
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) return true;
    if (ia == a.end() || ib->first < ia->first) return false;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

std::string NatPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Natural>*> ordered;
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(), [](auto* x, auto* y) { return graded_lex_before(x->first, y->first); });
  std::string out;
  for (const auto* t : ordered) {
    if (!out.empty()) out += " + ";
    std::string term;
    if (t->second != 1 || t->first.empty()) term = t->second.get_str();
    for (const auto& [var, e] : t->first) {
      if (!term.empty()) term += '*';
      term += var;
      if (e != 1) term += "^" + std::to_string(e);
    }
    out += term;
  }
  return out;
}

Equation Equation::make(NatPolynomial lhs, NatPolynomial rhs) {
  Equation eq;
  auto vars = lhs.variables();
  vars.merge(rhs.variables());
  eq.variables.assign(vars.begin(), vars.end());
  eq.lhs = std::move(lhs);
  eq.rhs = std::move(rhs);
  return eq;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  NatPolynomial sum() {
    NatPolynomial acc = product();
    while (accept('+')) acc += product();
    return acc;
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

 private:
  NatPolynomial product() {
    NatPolynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  NatPolynomial power() {
    NatPolynomial base = atom();
    if (accept('^')) {
      skip_space();
      const Natural e = natural();
      if (!e.fits_uint_p() || e > 1024) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  NatPolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NatPolynomial inner = sum();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return NatPolynomial::constant(natural());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return NatPolynomial::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Natural natural() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return Natural(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::SyntaxError, why + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NatPolynomial parse_polynomial(std::string_view text) {
  PolyParser p(text);
  NatPolynomial poly = p.sum();
  p.expect_end();
  return poly;
}

Equation parse_equation(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw Error(Errc::SyntaxError, "expected exactly one '=' in \"" + std::string(text) + "\"");
  }
  return Equation::make(parse_polynomial(text.substr(0, eq)), parse_polynomial(text.substr(eq + 1)));
}

std::vector<Equation> parse_equations(std::string_view text) {
  std::vector<Equation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') out.push_back(parse_equation(line));
    start = end + 1;
  }
  return out;
}

Equation combine_equations(std::span<const Equation> eqs) {
  if (eqs.empty()) throw Error(Errc::ParameterOutOfRange, "nothing to combine");
  NatPolynomial squares;
  NatPolynomial cross;
  const auto two = NatPolynomial::constant(2);
  for (const auto& eq : eqs) {
    squares += eq.lhs * eq.lhs + eq.rhs * eq.rhs;
    cross += two * eq.lhs * eq.rhs;
  }
  return Equation::make(std::move(squares), std::move(cross));
}

}  // namespace mm::dioph
