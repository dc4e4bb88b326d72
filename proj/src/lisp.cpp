#include "mm/lisp.hpp"

#include <limits>

#include "mm/error.hpp"

namespace mm::lisp {

// ---------------------------------------------------------------------------
// Value

Value::Value() : node_(std::make_shared<const Node>(List{})) {}

Value Value::word(std::string text) { return Value(std::make_shared<const Node>(Word{std::move(text)})); }
Value Value::number(Natural n) { return Value(std::make_shared<const Node>(std::move(n))); }
Value Value::list(List elements) { return Value(std::make_shared<const Node>(std::move(elements))); }
Value Value::closure(Closure c) { return Value(std::make_shared<const Node>(std::move(c))); }

Value Value::from_sexpr(const SExpr& e) {
  if (e.is_word()) return word(e.as_word());
  if (e.is_number()) return number(e.as_number());
  List out;
  out.reserve(e.as_list().size());
  for (const auto& child : e.as_list()) out.push_back(from_sexpr(child));
  return list(std::move(out));
}

bool Value::is_word() const noexcept { return std::holds_alternative<Word>(*node_); }
bool Value::is_number() const noexcept { return std::holds_alternative<Natural>(*node_); }
bool Value::is_list() const noexcept { return std::holds_alternative<List>(*node_); }
bool Value::is_closure() const noexcept { return std::holds_alternative<Closure>(*node_); }

const std::string& Value::as_word() const { return std::get<Word>(*node_).text; }
const Natural& Value::as_number() const { return std::get<Natural>(*node_); }
const Value::List& Value::as_list() const { return std::get<List>(*node_); }
const Closure& Value::as_closure() const { return std::get<Closure>(*node_); }

SExpr Value::to_sexpr() const {
  if (is_word()) return SExpr::word(as_word());
  if (is_number()) return SExpr::number(as_number());
  if (is_closure()) {
    const auto& c = as_closure();
    SExpr::List params;
    for (const auto& p : c.params) params.push_back(SExpr::word(p));
    return SExpr::list({SExpr::word("lambda"), SExpr::list(std::move(params)), c.body});
  }
  SExpr::List out;
  for (const auto& child : as_list()) out.push_back(child.to_sexpr());
  return SExpr::list(std::move(out));
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->index() != b.node_->index()) return false;
  if (a.is_word()) return a.as_word() == b.as_word();
  if (a.is_number()) return a.as_number() == b.as_number();
  if (a.is_list()) return a.as_list() == b.as_list();
  return false;  // distinct function values
}

// ---------------------------------------------------------------------------
// Environment

Env extend(Env env, std::string name, Value value) {
  return std::make_shared<const Binding>(Binding{std::move(name), std::move(value), std::move(env)});
}

const Value* lookup(const Env& env, const std::string& name) {
  for (const Binding* b = env.get(); b != nullptr; b = b->next.get()) {
    if (b->name == name) return &b->value;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

constexpr const char* kPrimitives[] = {"+", "-", "*", "^", "=", "atom", "car", "cdr", "cons", "if", "let", "'"};

std::size_t primitive_arity(const std::string& op) {
  if (op == "if" || op == "let") return 3;
  if (op == "atom" || op == "car" || op == "cdr" || op == "'") return 1;
  return 2;
}

const Natural& require_number(const Value& v, const std::string& op) {
  if (!v.is_number()) throw Error(Errc::NotANumber, "'" + op + "' expects numbers, got " + print(v.to_sexpr()));
  return v.as_number();
}

Value truth(bool b) { return Value::word(b ? "true" : "false"); }

struct DepthGuard {
  std::uint32_t& depth;
  explicit DepthGuard(std::uint32_t& d, std::uint32_t limit) : depth(d) {
    if (++depth > limit) {
      --depth;
      throw Error(Errc::BudgetExhausted, "evaluation nested deeper than " + std::to_string(limit));
    }
  }
  ~DepthGuard() { --depth; }
};

}  // namespace

bool is_primitive(const std::string& word) {
  for (const char* p : kPrimitives) {
    if (word == p) return true;
  }
  return false;
}

Value Evaluator::eval(const SExpr& expr, const Env& env) {
  steps_ = 0;
  depth_ = 0;
  return eval_in(expr, env);
}

void Evaluator::tick() {
  if (steps_ >= budget_.max_steps) {
    throw Error(Errc::BudgetExhausted, "step budget of " + std::to_string(budget_.max_steps) + " exhausted");
  }
  ++steps_;
}

Value Evaluator::eval_in(const SExpr& expr, const Env& env) {
  if (expr.is_number()) return Value::number(expr.as_number());
  if (expr.is_word()) {
    if (const Value* bound = lookup(env, expr.as_word())) return *bound;
    return Value::word(expr.as_word());
  }
  const auto& form = expr.as_list();
  if (form.empty()) return Value{};

  DepthGuard guard(depth_, budget_.max_depth);
  const SExpr& head = form.front();

  Value callee;
  if (head.is_word()) {
    const Value* bound = lookup(env, head.as_word());
    if (bound != nullptr && bound->is_closure()) {
      callee = *bound;
    } else if (is_primitive(head.as_word())) {
      return apply_primitive(head.as_word(), form, env);
    } else {
      throw Error(Errc::ApplyNonFunction, "'" + head.as_word() + "' is not a function");
    }
  } else if (head.is_list()) {
    callee = eval_in(head, env);
    if (!callee.is_closure()) throw Error(Errc::ApplyNonFunction, print(head) + " is not a function");
  } else {
    throw Error(Errc::ApplyNonFunction, print(head) + " is not a function");
  }

  std::vector<Value> args;
  args.reserve(form.size() - 1);
  for (std::size_t i = 1; i < form.size(); ++i) args.push_back(eval_in(form[i], env));
  return apply_closure(callee, std::move(args));
}

Value Evaluator::apply_closure(const Value& fn, std::vector<Value> args) {
  const Closure& c = fn.as_closure();
  if (args.size() != c.params.size()) {
    throw Error(Errc::ArityMismatch, "'" + c.name + "' takes " + std::to_string(c.params.size()) +
                                         " argument(s), got " + std::to_string(args.size()));
  }
  tick();
  Env scope = extend(c.env, c.name, fn);
  for (std::size_t i = 0; i < args.size(); ++i) scope = extend(std::move(scope), c.params[i], std::move(args[i]));
  return eval_in(c.body, scope);
}

Value Evaluator::apply_primitive(const std::string& op, const SExpr::List& form, const Env& env) {
  const std::size_t argc = form.size() - 1;
  if (argc != primitive_arity(op)) {
    throw Error(Errc::ArityMismatch, "'" + op + "' takes " + std::to_string(primitive_arity(op)) +
                                         " argument(s), got " + std::to_string(argc));
  }
  tick();

  if (op == "'") return Value::from_sexpr(form[1]);
  if (op == "if") {
    const Value cond = eval_in(form[1], env);
    const bool is_false = cond.is_word() && cond.as_word() == "false";
    return eval_in(is_false ? form[3] : form[2], env);
  }
  if (op == "let") return eval_let(form, env);

  if (argc == 1) {
    const Value x = eval_in(form[1], env);
    if (op == "atom") return truth(x.is_atom());
    if (x.is_atom()) return x;  // car/cdr of an atom is the atom itself
    const auto& items = x.as_list();
    if (op == "car") return items.front();
    return Value::list(Value::List(items.begin() + 1, items.end()));
  }

  const Value a = eval_in(form[1], env);
  const Value b = eval_in(form[2], env);
  if (op == "=") return truth(a == b);
  if (op == "cons") {
    Value::List items;
    if (b.is_list()) {
      items.reserve(b.as_list().size() + 1);
      items.push_back(a);
      items.insert(items.end(), b.as_list().begin(), b.as_list().end());
    } else {
      items.push_back(a);
    }
    return Value::list(std::move(items));
  }

  const Natural& x = require_number(a, op);
  const Natural& y = require_number(b, op);
  if (op == "+") return Value::number(x + y);
  if (op == "*") return Value::number(x * y);
  if (op == "-") return Value::number(x >= y ? Natural(x - y) : Natural(0));
  // "^": 0^0 = 1 falls out of mpz_pow_ui.
  if (x <= 1) return Value::number(y == 0 ? Natural(1) : x);
  if (!y.fits_ulong_p() || y.get_ui() > (1ul << 32)) {
    throw Error(Errc::BudgetExhausted, "exponent " + y.get_str() + " is too large");
  }
  return Value::number(upow(x, y.get_ui()));
}

Value Evaluator::eval_let(const SExpr::List& form, const Env& env) {
  const SExpr& target = form[1];
  if (target.is_word()) {
    Value bound = eval_in(form[2], env);
    return eval_in(form[3], extend(env, target.as_word(), std::move(bound)));
  }
  if (target.is_list() && !target.is_nil()) {
    Closure c;
    for (const auto& part : target.as_list()) {
      if (!part.is_word()) throw Error(Errc::MalformedLet, "function header must be words: " + print(target));
    }
    c.name = target.as_list().front().as_word();
    for (std::size_t i = 1; i < target.as_list().size(); ++i) c.params.push_back(target.as_list()[i].as_word());
    c.body = form[2];
    c.env = env;
    std::string name = c.name;
    return eval_in(form[3], extend(env, std::move(name), Value::closure(std::move(c))));
  }
  throw Error(Errc::MalformedLet, "cannot bind " + print(target));
}

std::string eval_text(std::string_view text, EvalBudget budget, const Env& env) {
  Evaluator ev(budget);
  return print(ev.eval(parse(text), env).to_sexpr());
}

// ---------------------------------------------------------------------------
// Repl

std::string Repl::feed(std::string_view line) {
  try {
    const SExpr expr = parse(line);
    if (persist_ && expr.is_list() && expr.as_list().size() == 3 && expr.as_list()[0].is_word() &&
        expr.as_list()[0].as_word() == "let") {
      // Body-less let: install the binding for the rest of the session.
      const SExpr& target = expr.as_list()[1];
      const SExpr probe = SExpr::list({expr.as_list()[0], target, expr.as_list()[2],
                                       target.is_list() && !target.is_nil() ? target.as_list().front() : target});
      Evaluator ev(budget_);
      Value bound = ev.eval(probe, session_);
      const std::string name = target.is_word() ? target.as_word() : target.as_list().front().as_word();
      session_ = extend(session_, name, bound);
      return name;
    }
    Evaluator ev(budget_);
    return print(ev.eval(expr, persist_ ? session_ : nullptr).to_sexpr());
  } catch (const Error& e) {
    return "error: " + std::string(e.what());
  }
}

}  // namespace mm::lisp
