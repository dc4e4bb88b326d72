#include "mm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "mm/codec.hpp"
#include "mm/complexity.hpp"
#include "mm/constants.hpp"
#include "mm/diophantine.hpp"
#include "mm/error.hpp"
#include "mm/lisp.hpp"
#include "mm/machine.hpp"
#include "mm/normality.hpp"
#include "mm/omega.hpp"
#include "mm/polynomial.hpp"

namespace mm::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input that names a file, or "-" for stdin.
std::string slurp(const std::string& source, std::istream& in) {
  std::stringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(source);
    if (!file) throw std::invalid_argument("cannot open " + source);
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// A bit string from the positional argument, or from stdin when absent.
BitString bits_arg(const std::string& arg, std::istream& in) {
  return BitString(trim(arg.empty() || arg == "-" ? slurp("-", in) : arg));
}

Json dyadic_json(const omega::Dyadic& d) {
  return Json{{"numerator", d.numerator().get_str()}, {"exponent", std::to_string(d.exponent())}};
}

Json verdict_json(const machine::HaltVerdict& v) {
  using K = machine::HaltVerdict::Kind;
  Json j;
  switch (v.kind) {
    case K::Halts:
      j["verdict"] = "HALTS";
      j["output"] = std::to_string(v.output);
      j["steps"] = std::to_string(v.steps);
      break;
    case K::Diverges: j["verdict"] = "DIVERGES"; break;
    case K::Unknown:
      j["verdict"] = "UNKNOWN";
      j["budget"] = std::to_string(v.budget);
      break;
  }
  return j;
}

Json expansion_json(const digits::Expansion& e) {
  Json j;
  j["base"] = std::to_string(e.base);
  j["integer_part"] = e.integer_part.get_str(static_cast<int>(e.base));
  j["digits"] = e.digits;
  j["count"] = std::to_string(e.digits.size());
  j["certified"] = true;
  j["exact_value"] = e.exact_value ? Json(to_string(*e.exact_value)) : Json(nullptr);
  j["terminated"] = e.terminated;
  j["precision_used"] = std::to_string(e.precision_used);
  return j;
}

// Options shared by every subcommand.
struct Global {
  bool json = false;
  int jobs = 1;
  unsigned guard = 24;

  kernels::Enumeration enumeration() const { return {guard, jobs, false}; }
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  void add_lisp(CLI::App& app);
  void add_codec(CLI::App& app);
  void add_machine(CLI::App& app);
  void add_omega(CLI::App& app);
  void add_complexity(CLI::App& app);
  void add_dioph(CLI::App& app);
  void add_const(CLI::App& app);
  void add_normal(CLI::App& app);

  // Registers a leaf subcommand whose body runs after a successful parse.
  CLI::App* leaf(CLI::App& parent, const std::string& name, const std::string& help, std::function<int()> body) {
    CLI::App* sub = parent.add_subcommand(name, help);
    sub->callback([this, body = std::move(body)] { action_ = body; });
    return sub;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Global g_;
  std::function<int()> action_;

  // Storage bound to CLI options.
  std::string s1_, s2_;
  std::uint64_t n1_ = 0, n2_ = 0, n3_ = 0;
  std::uint64_t budget_ = 0;
  bool flag1_ = false, flag2_ = false;
  std::string scheme_ = "doubled";
  unsigned base_ = 10, k_ = 1;
  std::string threshold_ = "1/50";
};

int Runner::run(const std::vector<std::string>& args) {
  if (const char* guard = std::getenv("MM_GUARD")) {
    try {
      g_.guard = static_cast<unsigned>(std::stoul(guard));
    } catch (const std::exception&) {
      err_ << "error: MM_GUARD must be a natural number\n";
      return kUsage;
    }
  }

  CLI::App app{"mm: algorithmic information theory workbench"};
  app.name("mm");
  app.require_subcommand(1);
  app.add_flag("--json", g_.json, "Machine-readable JSON output");
  app.add_option("--jobs", g_.jobs, "Worker threads for enumerations (output is identical for any value)")
      ->check(CLI::Range(1, 256));
  add_lisp(app);
  add_codec(app);
  add_machine(app);
  add_omega(app);
  add_complexity(app);
  add_dioph(app);
  add_const(app);
  add_normal(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action_ ? action_() : kUsage;
  } catch (const Error& e) {
    if (g_.json) {
      err_ << Json{{"error", std::string(e.name())}, {"message", e.what()}}.dump() << '\n';
    } else {
      err_ << "error: " << e.what() << '\n';
    }
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  }
}

// ---------------------------------------------------------------------------

void Runner::add_lisp(CLI::App& app) {
  auto* lisp = app.add_subcommand("lisp", "Evaluate expressions in the LISP dialect");
  lisp->require_subcommand(1);
  budget_ = lisp::EvalBudget{}.max_steps;

  auto* eval = leaf(*lisp, "eval", "Evaluate one expression from a file or '-' (stdin)", [this] {
    const std::string text = slurp(s1_, in_);
    const std::string value = lisp::eval_text(text, lisp::EvalBudget{budget_});
    if (g_.json) {
      emit(Json{{"value", value}});
    } else {
      out_ << value << '\n';
    }
    return kOk;
  });
  eval->add_option("source", s1_, "File name, or - for stdin")->required();
  eval->add_option("--budget", budget_, "Maximum evaluation steps");

  auto* repl = leaf(*lisp, "repl", "Evaluate one expression per input line", [this] {
    lisp::Repl session(flag1_, lisp::EvalBudget{budget_});
    std::string line;
    while (std::getline(in_, line)) {
      if (trim(line).empty()) continue;
      const std::string result = session.feed(line);
      if (g_.json) {
        const bool failed = result.rfind("error: ", 0) == 0;
        emit(failed ? Json{{"error", result.substr(7)}} : Json{{"value", result}});
      } else {
        out_ << result << '\n';
      }
    }
    return kOk;
  });
  repl->add_flag("--persist", flag1_, "Keep body-less (let ...) bindings across lines");
  repl->add_option("--budget", budget_, "Maximum evaluation steps per line");
}

void Runner::add_codec(CLI::App& app) {
  auto* codec = app.add_subcommand("codec", "Self-delimiting codes and binary/ASCII conversions");
  codec->require_subcommand(1);
  const std::vector<std::string> schemes{"doubled", "header", "two-header"};

  auto* enc = leaf(*codec, "encode", "Encode a bit string (argument or stdin)", [this] {
    const auto encoded = codec::encode(codec::parse_scheme(scheme_), bits_arg(s1_, in_));
    if (g_.json) {
      emit(Json{{"scheme", scheme_}, {"encoded", encoded.str()}});
    } else {
      out_ << encoded.str() << '\n';
    }
    return kOk;
  });
  enc->add_option("--scheme", scheme_, "doubled | header | two-header")->check(CLI::IsMember(schemes));
  enc->add_option("bits", s1_, "Payload bits; read from stdin when omitted");

  auto* dec = leaf(*codec, "decode", "Decode codewords from the front of a bit string", [this] {
    const auto scheme = codec::parse_scheme(scheme_);
    const BitString stream = bits_arg(s1_, in_);
    if (flag1_) {
      const auto payloads = codec::decode_all(scheme, stream);
      if (g_.json) {
        Json arr = Json::array();
        for (const auto& p : payloads) arr.push_back(p.str());
        emit(Json{{"scheme", scheme_}, {"payloads", arr}});
      } else {
        for (const auto& p : payloads) out_ << p.str() << '\n';
      }
      return kOk;
    }
    const auto d = codec::decode(scheme, stream);
    if (g_.json) {
      emit(Json{{"scheme", scheme_}, {"payload", d.payload.str()}, {"remainder", d.remainder.str()}});
    } else {
      out_ << d.payload.str() << '\n';
      if (!d.remainder.empty()) out_ << d.remainder.str() << '\n';
    }
    return kOk;
  });
  dec->add_option("--scheme", scheme_, "doubled | header | two-header")->check(CLI::IsMember(schemes));
  dec->add_option("bits", s1_, "Encoded stream; read from stdin when omitted");
  dec->add_flag("--all", flag1_, "Decode every codeword, one payload per line");

  auto* n2b = leaf(*codec, "to-bits", "Binary numeral of a natural number", [this] {
    out_ << number_to_bits(Natural(s1_, 10)).str() << '\n';
    return kOk;
  });
  n2b->add_option("n", s1_)->required()->check(CLI::Number);
  auto* b2n = leaf(*codec, "from-bits", "Natural number of a binary numeral", [this] {
    out_ << bits_to_number(BitString(s1_)).get_str() << '\n';
    return kOk;
  });
  b2n->add_option("bits", s1_)->required();
  auto* t2n = leaf(*codec, "text-to-number", "Natural encoding of an ASCII text", [this] {
    out_ << text_to_number(s1_).get_str() << '\n';
    return kOk;
  });
  t2n->add_option("text", s1_)->required();
  auto* n2t = leaf(*codec, "number-to-text", "ASCII text encoded by a natural", [this] {
    out_ << number_to_text(Natural(s1_, 10)) << '\n';
    return kOk;
  });
  n2t->add_option("n", s1_)->required()->check(CLI::Number);
}

void Runner::add_machine(CLI::App& app) {
  auto* m = app.add_subcommand("machine", "Run or decide self-delimiting toy-machine programs");
  m->require_subcommand(1);
  auto report = [this](const machine::ToyProgram& p, const machine::HaltVerdict& v) {
    if (g_.json) {
      Json j{{"program", p.encoded().str()}, {"body", p.body().str()}};
      j.update(verdict_json(v));
      emit(j);
    } else {
      out_ << machine::to_string(v) << '\n';
    }
    return kOk;
  };
  auto* run = leaf(*m, "run", "Simulate with a step budget", [this, report] {
    const auto p = machine::ToyProgram::load(BitString(s1_));
    return report(p, machine::run_budgeted(p, budget_));
  });
  run->add_option("bits", s1_, "Encoded program (a doubled codeword)")->required();
  run->add_option("--budget", budget_, "Step budget")->default_val(1000);

  auto* decide = leaf(*m, "decide", "Exact halting decision", [this, report] {
    const auto p = machine::ToyProgram::load(BitString(s1_));
    return report(p, machine::decide_halting(p));
  });
  decide->add_option("bits", s1_, "Encoded program (a doubled codeword)")->required();
}

void Runner::add_omega(CLI::App& app) {
  auto* o = app.add_subcommand("omega", "Halting probability of the toy machine");
  o->require_subcommand(1);

  auto* approx = leaf(*o, "approx", "N-th lower approximation (programs <= N bits, N steps)", [this] {
    const auto rep = omega::omega_approx(n1_, g_.enumeration(), flag1_ || g_.json);
    if (g_.json) {
      Json list = Json::array();
      for (const auto& p : rep.halted_programs) {
        list.push_back({{"body", p.body.str()}, {"output", std::to_string(p.output)}, {"steps", std::to_string(p.steps)}});
      }
      emit(Json{{"n", std::to_string(rep.n)}, {"value", dyadic_json(rep.value)}, {"halted_programs", list}});
    } else {
      out_ << rep.value.str() << '\n';
      for (const auto& p : rep.halted_programs) {
        out_ << machine::ToyProgram::from_body(p.body).encoded().str() << ' ' << p.output << ' ' << p.steps << '\n';
      }
    }
    return kOk;
  });
  approx->add_option("N", n1_)->required();
  approx->add_flag("--list", flag1_, "List every halting program: encoding, output, steps");

  auto* exact = leaf(*o, "exact", "Certified interval from deciding all bodies <= L bits", [this] {
    const auto iv = omega::omega_exact(static_cast<unsigned>(n1_), g_.enumeration());
    if (g_.json) {
      emit(Json{{"body_cutoff", std::to_string(iv.body_cutoff)}, {"lo", dyadic_json(iv.lo)}, {"hi", dyadic_json(iv.hi)}});
    } else {
      out_ << iv.lo.str() << ' ' << iv.hi.str() << '\n';
    }
    return kOk;
  });
  exact->add_option("L", n1_)->required();

  auto* bits = leaf(*o, "bits", "Certified bits 1..n after the binary point", [this] {
    omega::OmegaCertifier cert(g_.enumeration());
    std::string out;
    Json cutoffs = Json::array();
    for (unsigned i = 1; i <= n1_; ++i) {
      out.push_back(static_cast<char>('0' + cert.bit(i)));
      cutoffs.push_back(std::to_string(*cert.certifying_cutoff(i)));
    }
    if (g_.json) {
      emit(Json{{"bits", out}, {"certifying_cutoffs", cutoffs}});
    } else {
      out_ << out << '\n';
    }
    return kOk;
  });
  bits->add_option("--upto", n1_, "Number of bits")->required()->check(CLI::Range(1, 64));

  auto* kraft = leaf(*o, "kraft", "Kraft mass of the halting programs found by approx N", [this] {
    const auto mass = omega::kraft_sum(n1_, g_.enumeration());
    if (g_.json) {
      emit(Json{{"n", std::to_string(n1_)}, {"kraft_sum", dyadic_json(mass)}});
    } else {
      out_ << mass.str() << '\n';
    }
    return kOk;
  });
  kraft->add_option("N", n1_)->required();

  auto* chaitin = leaf(*o, "chaitin", "Program(n,k): halts iff bit n of approximation k is 1", [this] {
    const auto v = omega::chaitin_bit_predicate(static_cast<unsigned>(n1_), n2_, g_.enumeration());
    if (g_.json) {
      emit(verdict_json(v));
    } else {
      out_ << machine::to_string(v) << '\n';
    }
    return kOk;
  });
  chaitin->add_option("n", n1_)->required();
  chaitin->add_option("k", n2_)->required();

  auto* ok = leaf(*o, "ord-kieu", "Number of k with 2^n * Omega > k > 0", [this] {
    const auto count = omega::ord_kieu_count(static_cast<unsigned>(n1_), g_.enumeration());
    const bool odd = mpz_odd_p(count.get_mpz_t()) != 0;
    if (g_.json) {
      emit(Json{{"n", std::to_string(n1_)}, {"count", count.get_str()}, {"parity", odd ? "odd" : "even"}});
    } else {
      out_ << count.get_str() << ' ' << (odd ? "odd" : "even") << '\n';
    }
    return kOk;
  });
  ok->add_option("n", n1_)->required();
}

void Runner::add_complexity(CLI::App& app) {
  auto* c = app.add_subcommand("complexity", "Program-size complexity over the toy machine");
  c->require_subcommand(1);
  auto opts = [this] { return complexity::SearchOptions{g_.enumeration(), {}}; };

  auto* h = leaf(*c, "h", "Size of the smallest program producing n", [this, opts] {
    const auto rec = complexity::h_of(n1_, n2_, opts());
    if (g_.json) {
      emit(Json{{"target", std::to_string(rec.target)},
                {"h", rec.h ? Json(std::to_string(*rec.h)) : Json(nullptr)},
                {"witness", rec.witness ? Json(rec.witness->encoded().str()) : Json(nullptr)},
                {"search_bound", std::to_string(rec.search_bound)}});
    } else if (rec.h) {
      out_ << *rec.h << ' ' << rec.witness->encoded().str() << '\n';
    } else {
      out_ << "NONE\n";
    }
    return kOk;
  });
  h->add_option("n", n1_)->required();
  h->add_option("--bound", n2_, "Largest program size searched, in bits")->default_val(16);

  auto* el = leaf(*c, "elegant", "Every elegant program up to the bound", [this, opts] {
    const auto progs = complexity::elegant_programs(n2_, opts());
    if (g_.json) {
      Json arr = Json::array();
      for (const auto& p : progs) {
        arr.push_back({{"program", p.program.encoded().str()}, {"size", std::to_string(p.program.encoded().size())},
                       {"output", std::to_string(p.output)}});
      }
      emit(Json{{"bound", std::to_string(n2_)}, {"elegant", arr}});
    } else {
      for (const auto& p : progs) out_ << p.program.encoded().str() << ' ' << p.output << '\n';
    }
    return kOk;
  });
  el->add_option("--bound", n2_, "Largest program size searched, in bits")->default_val(16);

  auto* mi = leaf(*c, "mutual", "H(x) + H(y) - H(x,y)", [this, opts] {
    const auto r = complexity::mutual_information(n1_, n2_, n3_,
                                                  flag1_ ? complexity::Pairing::Symmetric : complexity::Pairing::Cantor,
                                                  opts());
    if (g_.json) {
      emit(Json{{"x", std::to_string(n1_)}, {"y", std::to_string(n2_)}, {"pair", std::to_string(r.paired)},
                {"h_x", std::to_string(r.h_x)}, {"h_y", std::to_string(r.h_y)}, {"h_xy", std::to_string(r.h_xy)},
                {"mutual_information", std::to_string(r.value)}});
    } else {
      out_ << r.value << '\n';
    }
    return kOk;
  });
  mi->add_option("x", n1_)->required();
  mi->add_option("y", n2_)->required();
  mi->add_option("--bound", n3_, "Largest program size searched, in bits")->default_val(16);
  mi->add_flag("--symmetric", flag1_, "Pair (min, max) so the result ignores argument order");
}

void Runner::add_dioph(CLI::App& app) {
  auto* d = app.add_subcommand("dioph", "Binomial parity and diophantine gadgets");
  d->require_subcommand(1);

  auto* lucas = leaf(*d, "lucas", "Parity of C(n, k) by the bit-subset rule", [this] {
    const int odd = dioph::lucas_parity(Natural(s1_, 10), Natural(s2_, 10));
    if (g_.json) {
      emit(Json{{"n", s1_}, {"k", s2_}, {"parity", odd ? "odd" : "even"}});
    } else {
      out_ << (odd ? "odd" : "even") << '\n';
    }
    return kOk;
  });
  lucas->add_option("n", s1_)->required()->check(CLI::Number);
  lucas->add_option("k", s2_)->required()->check(CLI::Number);

  auto* mj = leaf(*d, "mj", "Seven-unknown witness that C(N, K) is odd", [this] {
    const auto w = dioph::mj_witness(static_cast<unsigned>(n1_), static_cast<unsigned>(n2_));
    std::optional<dioph::UniquenessReport> rep;
    if (flag1_) rep = dioph::mj_uniqueness_check(static_cast<unsigned>(n1_), static_cast<unsigned>(n2_));
    if (g_.json) {
      Json j{{"N", std::to_string(n1_)}, {"K", std::to_string(n2_)}};
      if (w) {
        j["witness"] = {{"b", w->b.get_str()}, {"x", w->x.get_str()}, {"y", w->y.get_str()}, {"z", w->z.get_str()},
                        {"u", w->u.get_str()}, {"v", w->v.get_str()}, {"w", w->w.get_str()}};
      } else {
        j["witness"] = nullptr;
      }
      if (rep) {
        j["unique"] = rep->unique;
        j["solutions"] = std::to_string(rep->solutions.size());
        j["candidates"] = std::to_string(rep->candidates);
      }
      emit(j);
    } else {
      if (w) {
        out_ << "b=" << w->b << " x=" << w->x << " y=" << w->y << " z=" << w->z << " u=" << w->u << " v=" << w->v
             << " w=" << w->w << '\n';
      } else {
        out_ << "NONE\n";
      }
      if (rep) out_ << "unique " << (rep->unique ? "true" : "false") << " solutions " << rep->solutions.size() << '\n';
    }
    return kOk;
  });
  mj->add_option("N", n1_)->required();
  mj->add_option("K", n2_)->required();
  mj->add_flag("--check-unique", flag1_, "Confirm uniqueness by exhaustive search (N <= 6)");

  auto* combine = leaf(*d, "combine", "Merge equations (one 'L = R' per line) into one", [this] {
    const auto eqs = dioph::parse_equations(slurp(s1_, in_));
    const auto combined = dioph::combine_equations(eqs);
    if (g_.json) {
      emit(Json{{"equation", combined.str()}, {"lhs", combined.lhs.str()}, {"rhs", combined.rhs.str()},
                {"variables", combined.variables}});
    } else {
      out_ << combined.str() << '\n';
    }
    return kOk;
  });
  combine->add_option("file", s1_, "Equation file, or - for stdin")->required();
}

void Runner::add_const(CLI::App& app) {
  auto* c = app.add_subcommand("const", "Certified digits, series and prime constructions");
  c->require_subcommand(1);
  auto print_expansion = [this](const digits::Expansion& e) {
    if (g_.json) {
      emit(expansion_json(e));
    } else {
      out_ << e.str() << '\n';
    }
    return kOk;
  };
  auto print_rational = [this](const std::string& what, const Rational& q) {
    if (g_.json) {
      emit(Json{{"series", what}, {"value", to_string(q)}});
    } else {
      out_ << to_string(q) << '\n';
    }
    return kOk;
  };

  auto* dig = leaf(*c, "digits", "Certified digits of pi, e, sqrt2, liouville or stoneham", [this, print_expansion] {
    if (s1_ == "stoneham" && n1_ > constants::kSeriesDigitGuard) {
      throw Error(Errc::ParameterOutOfRange, "at most 65536 digits");
    }
    return print_expansion(constants::named_digits(s1_, base_, n1_));
  });
  dig->add_option("name", s1_)->required()->check(CLI::IsMember({"pi", "e", "sqrt2", "liouville", "stoneham"}));
  dig->add_option("--base", base_, "Digit base (2..36)")->default_val(10);
  dig->add_option("--count", n1_, "Fractional digits")->default_val(30);

  auto* bc = leaf(*c, "bc", "Digits of sum 1/(c^k b^(c^k)) in base b", [this, print_expansion] {
    return print_expansion(constants::bailey_crandall_digits(static_cast<unsigned>(n2_), static_cast<unsigned>(n3_), n1_));
  });
  bc->add_option("--b", n2_, "Base b")->required();
  bc->add_option("--c", n3_, "Parameter c, coprime to b")->required();
  bc->add_option("--count", n1_, "Fractional digits")->default_val(64);

  auto* series = c->add_subcommand("series", "Exact partial sums");
  series->require_subcommand(1);
  auto* geo = leaf(*series, "geometric", "1 + r + ... + r^n, or the limit", [this, print_rational] {
    const Rational r = parse_rational(s1_);
    return print_rational("geometric", flag1_ ? constants::geometric_limit(r) : constants::geometric_partial(r, n1_));
  });
  geo->add_option("--r", s1_, "Ratio, e.g. 1/2")->required();
  geo->add_option("--n", n1_, "Highest power")->default_val(10);
  geo->add_flag("--limit", flag1_, "Sum to infinity (|r| < 1)");
  auto* harm = leaf(*series, "harmonic", "1 + 1/2 + ... + 1/n", [this, print_rational] {
    return print_rational("harmonic", constants::harmonic_partial(n1_));
  });
  harm->add_option("--n", n1_)->required();
  auto* pr = leaf(*series, "prime-recip", "Sum of 1/p over primes p <= n", [this, print_rational] {
    return print_rational("prime-recip", constants::prime_reciprocal_partial(n1_));
  });
  pr->add_option("--n", n1_)->required();
  auto* lz = leaf(*series, "leibniz", "4 (1 - 1/3 + 1/5 - ...), n terms", [this, print_rational] {
    return print_rational("leibniz", constants::leibniz_pi_partial(n1_));
  });
  lz->add_option("--n", n1_)->required();
  auto* ee = leaf(*series, "e", "1 + 1/1! + ... + 1/n!", [this, print_rational] {
    return print_rational("e", constants::euler_e_partial(n1_));
  });
  ee->add_option("--n", n1_)->required();

  auto* interp = leaf(*c, "interp", "Lagrange polynomial through 'x y' points (one per line)", [this] {
    std::vector<std::pair<Rational, Rational>> pts;
    std::istringstream lines(slurp(s1_, in_));
    std::string x, y;
    while (lines >> x >> y) pts.emplace_back(parse_rational(x), parse_rational(y));
    const auto poly = constants::lagrange_interpolate(pts);
    if (g_.json) {
      Json coeffs = Json::array();
      for (const auto& q : poly) coeffs.push_back(to_string(q));
      emit(Json{{"coefficients", coeffs}, {"polynomial", constants::to_string(poly)}});
    } else {
      out_ << constants::to_string(poly) << '\n';
    }
    return kOk;
  });
  interp->add_option("file", s1_, "Points file, or - for stdin")->required();

  auto* primes = c->add_subcommand("primes", "Constructions around the infinitude of primes");
  primes->require_subcommand(1);
  auto* gap = leaf(*primes, "gap", "N!+2 .. N!+N with divisor witnesses", [this] {
    const auto members = constants::composite_gap(n1_);
    if (g_.json) {
      Json arr = Json::array();
      for (const auto& m : members) arr.push_back({{"value", m.value.get_str()}, {"divisor", std::to_string(m.divisor)}});
      emit(Json{{"N", std::to_string(n1_)}, {"gap", arr}});
    } else {
      for (const auto& m : members) out_ << m.value << ' ' << m.divisor << '\n';
    }
    return kOk;
  });
  gap->add_option("N", n1_)->required();
  auto* euclid = leaf(*primes, "euclid", "Next prime after N and the N!+1 bound", [this] {
    const auto r = constants::euclid_bound_check(n1_);
    if (g_.json) {
      emit(Json{{"N", std::to_string(n1_)}, {"next_prime", std::to_string(r.next_prime)}, {"bound", r.bound.get_str()},
                {"bound_holds", r.bound_holds}});
    } else {
      out_ << r.next_prime << ' ' << (r.bound_holds ? "true" : "false") << '\n';
    }
    return kOk;
  });
  euclid->add_option("N", n1_)->required();
  auto* perfect = leaf(*primes, "perfect", "Perfect number from the Mersenne candidate 2^n - 1", [this] {
    const auto p = constants::perfect_from_mersenne(static_cast<unsigned>(n1_));
    if (g_.json) {
      emit(Json{{"n", std::to_string(n1_)}, {"perfect", p ? Json(p->get_str()) : Json(nullptr)}});
    } else {
      out_ << (p ? p->get_str() : "NONE") << '\n';
    }
    return kOk;
  });
  perfect->add_option("n", n1_)->required();
}

void Runner::add_normal(CLI::App& app) {
  auto* n = app.add_subcommand("normal", "Borel block-frequency statistics");
  n->require_subcommand(1);
  auto* test = leaf(*n, "test", "Block-frequency test of a constant or a digit file", [this] {
    std::vector<std::uint8_t> digits;
    const std::vector<std::string> named{"pi", "e", "sqrt2", "liouville", "stoneham"};
    if (std::find(named.begin(), named.end(), s1_) != named.end()) {
      digits = constants::named_digits(s1_, base_, n1_).digit_values();
    } else {
      for (char ch : slurp(s1_, in_)) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        const unsigned d = std::isdigit(static_cast<unsigned char>(ch)) ? static_cast<unsigned>(ch - '0')
                                                                         : static_cast<unsigned>(std::tolower(ch) - 'a' + 10);
        digits.push_back(static_cast<std::uint8_t>(d));
        if (digits.size() == n1_) break;
      }
    }
    const Rational threshold = parse_rational(threshold_);
    const auto verdict = normality::simple_normal_test(digits, base_, threshold, k_, g_.jobs);
    const auto profile = flag1_ ? normality::normality_profile(digits, base_, k_, g_.jobs)
                                : std::vector<normality::BlockStats>{};
    if (g_.json) {
      Json j{{"source", s1_}, {"base", std::to_string(base_)}, {"k", std::to_string(k_)},
             {"count", std::to_string(digits.size())}, {"verdict", verdict.pass ? "PASS" : "FAIL"},
             {"max_deviation", to_string(verdict.statistic)}, {"max_deviation_decimal", verdict.statistic.get_d()},
             {"threshold", to_string(verdict.threshold)}};
      emit(j);
    } else {
      out_ << (verdict.pass ? "PASS" : "FAIL") << " k=" << k_ << " max_deviation=" << verdict.statistic.get_d()
           << " threshold=" << verdict.threshold.get_d() << '\n';
    }
    if (flag1_) {
      out_ << "k,block,frequency\n";
      for (const auto& s : profile) {
        for (std::size_t i = 0; i < s.counts.size(); ++i) {
          out_ << s.k << ',' << s.block_name(i) << ',' << s.frequency(i).get_d() << '\n';
        }
      }
    }
    return kOk;
  });
  test->add_option("--source", s1_, "pi | e | sqrt2 | liouville | stoneham | digit file | -")->required();
  test->add_option("--base", base_, "Digit base")->default_val(10);
  test->add_option("--k", k_, "Block length")->default_val(1)->check(CLI::Range(1, 12));
  test->add_option("--count", n1_, "Digits to examine")->default_val(10000);
  test->add_option("--threshold", threshold_, "Maximum allowed deviation, e.g. 0.02 or 1/50")->default_val("1/50");
  test->add_flag("--emit-plot-data", flag1_, "Append CSV rows k,block,frequency for k = 1..K");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Runner runner(in, out, err);
  return runner.run(args);
}

}  // namespace mm::cli
