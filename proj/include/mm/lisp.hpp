#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mm/sexpr.hpp"

namespace mm::lisp {

class Value;
struct Closure;
struct Binding;

// Persistent environment: a shared singly linked chain of bindings, innermost
// first. Extending never mutates an existing chain, so `let` stays local.
using Env = std::shared_ptr<const Binding>;

// Runtime value: the S-expression data of the dialect plus function values.
class Value {
 public:
  using List = std::vector<Value>;

  Value();  // ()

  static Value word(std::string text);
  static Value number(Natural n);
  static Value list(List elements);
  static Value closure(Closure c);
  static Value from_sexpr(const SExpr& e);

  bool is_word() const noexcept;
  bool is_number() const noexcept;
  bool is_list() const noexcept;
  bool is_closure() const noexcept;
  bool is_nil() const noexcept { return is_list() && as_list().empty(); }
  // `atom` predicate: everything except a non-empty list.
  bool is_atom() const noexcept { return !is_list() || is_nil(); }

  const std::string& as_word() const;
  const Natural& as_number() const;
  const List& as_list() const;
  const Closure& as_closure() const;

  // Function values become (lambda (params...) body).
  SExpr to_sexpr() const;

  // Structural equality; function values compare by identity.
  friend bool operator==(const Value& a, const Value& b);

 private:
  struct Word {
    std::string text;
  };
  using Node = std::variant<Word, Natural, List, Closure>;

  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Closure {
  std::string name;
  std::vector<std::string> params;
  SExpr body;
  Env env;  // defining environment; the function's own name is bound at call time
};

struct Binding {
  std::string name;
  Value value;
  Env next;
};

Env extend(Env env, std::string name, Value value);
// Innermost binding of `name`, or nullptr.
const Value* lookup(const Env& env, const std::string& name);

struct EvalBudget {
  std::uint64_t max_steps = 10'000'000;
  // Nesting limit on the recursive evaluator; exceeding it is reported as
  // BudgetExhausted like running out of steps.
  std::uint32_t max_depth = 20'000;
};

class Evaluator {
 public:
  explicit Evaluator(EvalBudget budget = {}) : budget_(budget) {}

  // Throws mm::Error: BudgetExhausted, ArityMismatch, ApplyNonFunction,
  // NotANumber, MalformedLet.
  Value eval(const SExpr& expr, const Env& env = nullptr);

  std::uint64_t steps_used() const noexcept { return steps_; }

 private:
  Value eval_in(const SExpr& expr, const Env& env);
  Value apply_primitive(const std::string& op, const SExpr::List& form, const Env& env);
  Value apply_closure(const Value& fn, std::vector<Value> args);
  Value eval_let(const SExpr::List& form, const Env& env);
  void tick();

  EvalBudget budget_;
  std::uint64_t steps_ = 0;
  std::uint32_t depth_ = 0;
};

bool is_primitive(const std::string& word);

// Parses `text`, evaluates it in `env`, returns the canonical printed value.
std::string eval_text(std::string_view text, EvalBudget budget = {}, const Env& env = nullptr);

// Line-oriented session. Without persistence each line starts from an empty
// environment. With persistence a body-less top-level `(let x v)` or
// `(let (f p...) defn)` installs a binding visible to later lines.
class Repl {
 public:
  Repl(bool persist, EvalBudget budget) : persist_(persist), budget_(budget) {}

  // Returns the printed value, or "error: <Name>: <message>".
  std::string feed(std::string_view line);

 private:
  bool persist_;
  EvalBudget budget_;
  Env session_;
};

}  // namespace mm::lisp
