#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mm/bignum.hpp"

namespace mm {

// An S-expression: a word, an unsigned integer of any size, or a list.
// Values are immutable and share structure, so copies are cheap.
class SExpr {
 public:
  using List = std::vector<SExpr>;

  SExpr();  // the empty list

  static SExpr word(std::string text);
  static SExpr number(Natural value);
  static SExpr list(List elements);

  bool is_word() const noexcept;
  bool is_number() const noexcept;
  bool is_list() const noexcept;
  bool is_nil() const noexcept { return is_list() && as_list().empty(); }
  // Words, numbers and the empty list.
  bool is_atom() const noexcept { return !is_list() || is_nil(); }

  const std::string& as_word() const;
  const Natural& as_number() const;
  const List& as_list() const;

  friend bool operator==(const SExpr& a, const SExpr& b);

 private:
  struct Word {
    std::string text;
  };
  using Node = std::variant<Word, Natural, List>;

  explicit SExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Reads exactly one expression. Throws mm::Error with UnbalancedParens,
// EmptyInput, BadToken (digit-led token that is not a number) or
// TrailingInput.
SExpr parse(std::string_view text);

// Canonical form: one space between siblings, none next to parentheses.
std::string print(const SExpr& expr);

// True for tokens that are legal words (non-empty, no parens or whitespace,
// not starting with a digit).
bool is_word_token(std::string_view token) noexcept;

}  // namespace mm
