#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mm {

// Every domain failure in the workbench carries one of these codes. The CLI
// reports the code name verbatim, so renaming an enumerator is a format change.
enum class Errc {
  // sexpr
  UnbalancedParens,
  TrailingInput,
  EmptyInput,
  BadToken,
  // lisp
  BudgetExhausted,
  ArityMismatch,
  ApplyNonFunction,
  NotANumber,
  MalformedLet,
  // codecs
  Truncated,
  Malformed,
  NotTextEncodable,
  // machine / omega / complexity
  NotSelfDelimiting,
  PrecisionTooLarge,
  Uncertifiable,
  BoundTooLarge,
  Unresolvable,
  // diophantine
  ParameterOutOfRange,
  SyntaxError,
  // constants / normality
  RatioOutOfRange,
  NoSignChange,
  DuplicateAbscissa,
  CommonFactor,
  BaseOutOfRange,
  PrefixTooShort,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace mm
