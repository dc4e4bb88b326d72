#include "mm/error.hpp"

namespace mm {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UnbalancedParens: return "UnbalancedParens";
    case Errc::TrailingInput: return "TrailingInput";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::BadToken: return "BadToken";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ApplyNonFunction: return "ApplyNonFunction";
    case Errc::NotANumber: return "NotANumber";
    case Errc::MalformedLet: return "MalformedLet";
    case Errc::Truncated: return "Truncated";
    case Errc::Malformed: return "Malformed";
    case Errc::NotTextEncodable: return "NotTextEncodable";
    case Errc::NotSelfDelimiting: return "NotSelfDelimiting";
    case Errc::PrecisionTooLarge: return "PrecisionTooLarge";
    case Errc::Uncertifiable: return "Uncertifiable";
    case Errc::BoundTooLarge: return "BoundTooLarge";
    case Errc::Unresolvable: return "Unresolvable";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::RatioOutOfRange: return "RatioOutOfRange";
    case Errc::NoSignChange: return "NoSignChange";
    case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
    case Errc::CommonFactor: return "CommonFactor";
    case Errc::BaseOutOfRange: return "BaseOutOfRange";
    case Errc::PrefixTooShort: return "PrefixTooShort";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace mm
