#ifndef CTKIT_ERRORS_HPP
#define CTKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctk {

  // Every failure the library reports carries one of these codes; the C API
  // maps them one-to-one onto ctk_status values.
  enum class ErrorCode {
    InvalidArgument = 1,
    NonInvertibleDenominator,
    VarCountMismatch,
    ModulusMismatch,
    ZeroPolynomial,
    TooManyVariables,
    DecompositionFailure,
    NotRepresentable,
    InvalidFactor,
    ZeroBase,
    AlphaVanishes,
    NotPAdicIntegral,
    NotCoprime,
    WrongResidueClass,
    NotInFamily,
    SyntaxError,
    NonMonomialDenominator,
    UnknownVariable,
  };

  const char * error_code_name(ErrorCode code);

  class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string & what)
      : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
  };

  // Parser failures also carry the character offset of the offending token.
  class SyntaxError : public Error {
  public:
    SyntaxError(ErrorCode code, const std::string & what, std::size_t position)
      : Error(code, what + " at position " + std::to_string(position)),
        position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
  };

  [[noreturn]] inline void fail(ErrorCode code, const std::string & what)
  {
    throw Error(code, what);
  }

} // namespace ctk

#endif // CTKIT_ERRORS_HPP
