#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mm/bignum.hpp"

namespace mm::dioph {

// Product of variables raised to positive powers; empty means the constant 1.
using Monomial = std::map<std::string, unsigned>;
using Assignment = std::map<std::string, Natural>;

// Polynomial with strictly positive natural coefficients. Only sums and
// products can be formed, so no subtraction can ever appear.
class NatPolynomial {
 public:
  NatPolynomial() = default;  // zero
  static NatPolynomial constant(const Natural& c);
  static NatPolynomial variable(const std::string& name);

  NatPolynomial& operator+=(const NatPolynomial& other);
  friend NatPolynomial operator+(NatPolynomial a, const NatPolynomial& b) { return a += b; }
  friend NatPolynomial operator*(const NatPolynomial& a, const NatPolynomial& b);
  NatPolynomial pow(unsigned exponent) const;

  Natural evaluate(const Assignment& at) const;
  std::set<std::string> variables() const;
  const std::map<Monomial, Natural>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Structural scan: every stored coefficient is positive.
  bool subtraction_free() const;

  // Graded lexicographic: higher total degree first, ties broken by the
  // exponent of the alphabetically first variable, and so on.
  std::string str() const;

  friend bool operator==(const NatPolynomial&, const NatPolynomial&) = default;

 private:
  std::map<Monomial, Natural> terms_;
};

bool graded_lex_before(const Monomial& a, const Monomial& b);

struct Equation {
  NatPolynomial lhs;
  NatPolynomial rhs;
  std::vector<std::string> variables;  // sorted union of both sides

  static Equation make(NatPolynomial lhs, NatPolynomial rhs);
  bool holds_at(const Assignment& at) const { return lhs.evaluate(at) == rhs.evaluate(at); }
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

// Grammar: sum of products of powers; atoms are naturals, identifiers, or
// parenthesised sums; exponents are natural constants. Throws SyntaxError.
NatPolynomial parse_polynomial(std::string_view text);
Equation parse_equation(std::string_view text);
// One equation per non-blank line; '#' starts a comment line.
std::vector<Equation> parse_equations(std::string_view text);

// Sum of (L_i^2 + R_i^2) = sum of 2 L_i R_i. Over the naturals this holds
// exactly where every input equation holds.
Equation combine_equations(std::span<const Equation> eqs);

}  // namespace mm::dioph
