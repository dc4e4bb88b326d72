#include "mm/sexpr.hpp"

#include <cctype>

#include "mm/error.hpp"

namespace mm {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct Token {
  enum class Kind { Open, Close, Atom } kind;
  std::string_view text;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
    } else if (c == '(' || c == ')') {
      tokens.push_back({c == '(' ? Token::Kind::Open : Token::Kind::Close, text.substr(i, 1)});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && !is_space(text[i]) && text[i] != '(' && text[i] != ')') ++i;
      tokens.push_back({Token::Kind::Atom, text.substr(start, i - start)});
    }
  }
  return tokens;
}

SExpr make_atom(std::string_view token) {
  if (is_digit(token.front())) {
    for (char c : token) {
      if (!is_digit(c)) throw Error(Errc::BadToken, "token starts with a digit: " + std::string(token));
    }
    return SExpr::number(Natural(std::string(token), 10));
  }
  return SExpr::word(std::string(token));
}

void print_into(const SExpr& e, std::string& out) {
  if (e.is_word()) {
    out += e.as_word();
  } else if (e.is_number()) {
    out += e.as_number().get_str();
  } else {
    out += '(';
    bool first = true;
    for (const auto& child : e.as_list()) {
      if (!first) out += ' ';
      first = false;
      print_into(child, out);
    }
    out += ')';
  }
}

}  // namespace

SExpr::SExpr() : node_(std::make_shared<const Node>(List{})) {}

SExpr SExpr::word(std::string text) {
  return SExpr(std::make_shared<const Node>(Word{std::move(text)}));
}

SExpr SExpr::number(Natural value) {
  return SExpr(std::make_shared<const Node>(std::move(value)));
}

SExpr SExpr::list(List elements) {
  return SExpr(std::make_shared<const Node>(std::move(elements)));
}

bool SExpr::is_word() const noexcept { return std::holds_alternative<Word>(*node_); }
bool SExpr::is_number() const noexcept { return std::holds_alternative<Natural>(*node_); }
bool SExpr::is_list() const noexcept { return std::holds_alternative<List>(*node_); }

const std::string& SExpr::as_word() const { return std::get<Word>(*node_).text; }
const Natural& SExpr::as_number() const { return std::get<Natural>(*node_); }
const SExpr::List& SExpr::as_list() const { return std::get<List>(*node_); }

bool operator==(const SExpr& a, const SExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->index() != b.node_->index()) return false;
  if (a.is_word()) return a.as_word() == b.as_word();
  if (a.is_number()) return a.as_number() == b.as_number();
  return a.as_list() == b.as_list();
}

SExpr parse(std::string_view text) {
  long depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw Error(Errc::UnbalancedParens, "unexpected ')'");
  }
  if (depth != 0) throw Error(Errc::UnbalancedParens, "missing ')'");

  const auto tokens = tokenize(text);
  if (tokens.empty()) throw Error(Errc::EmptyInput, "no expression");

  // Explicit stack so deeply nested input cannot exhaust the call stack.
  std::vector<SExpr::List> open;
  std::size_t pos = 0;
  for (;; ++pos) {
    const Token& t = tokens[pos];
    if (t.kind == Token::Kind::Open) {
      open.emplace_back();
      continue;
    }
    SExpr done = t.kind == Token::Kind::Atom ? make_atom(t.text) : SExpr::list(std::move(open.back()));
    if (t.kind == Token::Kind::Close) open.pop_back();
    if (open.empty()) {
      if (pos + 1 != tokens.size()) {
        throw Error(Errc::TrailingInput, "extra input after expression: " + std::string(tokens[pos + 1].text));
      }
      return done;
    }
    open.back().push_back(std::move(done));
  }
}

std::string print(const SExpr& expr) {
  std::string out;
  print_into(expr, out);
  return out;
}

bool is_word_token(std::string_view token) noexcept {
  if (token.empty() || is_digit(token.front())) return false;
  for (char c : token) {
    if (is_space(c) || c == '(' || c == ')') return false;
  }
  return true;
}

}  // namespace mm
