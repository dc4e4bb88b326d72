#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "mm/error.hpp"
#include "mm/lisp.hpp"

using mm::Errc;
using mm::lisp::eval_text;

namespace {

Errc eval_error(const std::string& text, mm::lisp::EvalBudget budget = {}) {
  try {
    eval_text(text, budget);
  } catch (const mm::Error& e) {
    return e.code();
  }
  FAIL("expected an evaluation error for: " << text);
  return Errc::Malformed;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("lisp") {

TEST_CASE("worked examples from the text") {
  CHECK(eval_text("(if true (+ 1 2) (+ 3 4))") == "3");
  CHECK(eval_text("(if false (+ 1 2) (+ 3 4))") == "7");
  CHECK(eval_text("(' (a b c))") == "(a b c)");
  CHECK(eval_text("(car (' (a b c)))") == "a");
  CHECK(eval_text("(cdr (' (a b c)))") == "(b c)");
  CHECK(eval_text("(cons (' a) (' (b c)))") == "(a b c)");
  CHECK(eval_text("(let n (+ 1 2) (* 3 n))") == "9");
  CHECK(eval_text("(let (f n) (* n n) (f 10))") == "100");
  CHECK(eval_text("(+ 12 24)") == "36");
  CHECK(eval_text("(^ 2 15)") == "32768");
}

TEST_CASE("golden programs") {
  for (const char* name : {"if_true", "if_false", "let_value", "let_function", "factorial", "map_factorial"}) {
    const std::string dir = std::string(MM_TEST_DATA) + "/lisp/";
    const std::string program = read_file(dir + name + ".lisp");
    std::string expected = read_file(dir + name + ".out");
    while (!expected.empty() && expected.back() == '\n') expected.pop_back();
    CHECK_MESSAGE(eval_text(program) == expected, name);
  }
}

TEST_CASE("primitive semantics") {
  CHECK(eval_text("(- 3 5)") == "0");
  CHECK(eval_text("(- 5 3)") == "2");
  CHECK(eval_text("(^ 0 0)") == "1");
  CHECK(eval_text("(^ 2 100)") == "1267650600228229401496703205376");
  CHECK(eval_text("(= (' (1 (2))) (' (1 (2))))") == "true");
  CHECK(eval_text("(= 1 2)") == "false");
  CHECK(eval_text("(atom ())") == "true");
  CHECK(eval_text("(atom 5)") == "true");
  CHECK(eval_text("(atom (' (a)))") == "false");
  CHECK(eval_text("(car ())") == "()");
  CHECK(eval_text("(cdr ())") == "()");
  CHECK(eval_text("(car a)") == "a");
  CHECK(eval_text("(cdr (' (a)))") == "()");
  CHECK(eval_text("(if 0 yes no)") == "yes");
  CHECK(eval_text("(if () yes no)") == "yes");
  CHECK(eval_text("()") == "()");
  CHECK(eval_text("hello") == "hello");
}

TEST_CASE("if evaluates exactly one branch") {
  // The untaken branch would exhaust any budget.
  CHECK(eval_text("(let (loop n) (loop n) (if true 1 (loop 0)))", {1000, 100}) == "1");
}

TEST_CASE("let is local") {
  CHECK(eval_text("(cons (let x 1 x) (cons x ()))") == "(1 x)");
  CHECK(eval_text("(let x 1 (let x 2 x))") == "2");
  CHECK(eval_text("(let x 1 (+ (let x 2 x) x))") == "3");
}

TEST_CASE("functions as arguments and recursion") {
  CHECK(eval_text("(let (twice f x) (f (f x)) (let (sq n) (* n n) (twice sq 3)))") == "81");
  CHECK(eval_text("(let (count n) (if (= n 0) 0 (+ 1 (count (- n 1)))) (count 500))") == "500");
  CHECK(eval_text("(let (f n) (* n n) f)") == "(lambda (n) (* n n))");
}

TEST_CASE("error paths") {
  CHECK(eval_error("(car)") == Errc::ArityMismatch);
  CHECK(eval_error("(+ 1 2 3)") == Errc::ArityMismatch);
  CHECK(eval_error("(let (f a b) (+ a b) (f 1))") == Errc::ArityMismatch);
  CHECK(eval_error("(5 1 2)") == Errc::ApplyNonFunction);
  CHECK(eval_error("(foo 1)") == Errc::ApplyNonFunction);
  CHECK(eval_error("(+ a 1)") == Errc::NotANumber);
  CHECK(eval_error("(let 5 1 2)") == Errc::MalformedLet);
  CHECK(eval_error("(let (f n) (f n) (f 1))", {10000, 100000}) == Errc::BudgetExhausted);
  CHECK(eval_error("(let (f n) (+ 1 (f n)) (f 1))", {100000000, 500}) == Errc::BudgetExhausted);
  CHECK(eval_error("(^ 2 99999999999)") == Errc::BudgetExhausted);
}

TEST_CASE("budget monotonicity and determinism") {
  const std::string program = read_file(std::string(MM_TEST_DATA) + "/lisp/map_factorial.lisp");
  mm::lisp::Evaluator probe;
  probe.eval(mm::parse(program));
  const auto needed = probe.steps_used();
  CHECK(eval_error(program, {needed - 1, 20000}) == Errc::BudgetExhausted);
  for (std::uint64_t b : {needed, needed + 1, 2 * needed, needed * 100}) {
    CHECK(eval_text(program, {b, 20000}) == "(24 1 6 2 120)");
  }
}

TEST_CASE("car/cdr/cons laws and monus laws") {
  const std::uint64_t seed = 99;
  MESSAGE("seed " << seed);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 300; ++i) {
    const auto a = rng() % 100000, b = rng() % 100000;
    std::ostringstream x, y;
    x << "(' (" << a << " w (" << b << ")))";
    y << "(' (" << b << " v))";
    CHECK(eval_text("(car (cons " + x.str() + " " + y.str() + "))") == eval_text(x.str()));
    CHECK(eval_text("(cdr (cons " + x.str() + " " + y.str() + "))") == eval_text(y.str()));

    const std::string as = std::to_string(a), bs = std::to_string(b);
    const mm::Natural diff(eval_text("(- " + as + " " + bs + ")"));
    CHECK(diff + b >= a);
    if (b >= a) CHECK(diff == 0);
  }
}

TEST_CASE("repl sessions") {
  mm::lisp::Repl fresh(false, {});
  CHECK(fresh.feed("(+ 12 24)") == "36");
  CHECK(fresh.feed("()") == "()");
  CHECK(fresh.feed("(^ 2 15)") == "32768");
  CHECK(fresh.feed("(let x 5)").rfind("error: ", 0) == 0);
  CHECK(fresh.feed("(+ 1") == "error: UnbalancedParens: missing ')'");
  CHECK(fresh.feed("(+ 1 1)") == "2");

  mm::lisp::Repl kept(true, {});
  CHECK(kept.feed("(let x 5)") == "x");
  CHECK(kept.feed("(let (sq n) (* n n))") == "sq");
  CHECK(kept.feed("(sq x)") == "25");
  CHECK(kept.feed("(car)").rfind("error: ArityMismatch", 0) == 0);
  CHECK(kept.feed("x") == "5");
}

}  // TEST_SUITE
