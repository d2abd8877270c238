#include "ctkit/errors.hpp"

namespace ctk {

  const char * error_code_name(ErrorCode code)
  {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorCode::VarCountMismatch: return "VarCountMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::AlphaVanishes: return "AlphaVanishes";
    case ErrorCode::NotPAdicIntegral: return "NotPAdicIntegral";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::WrongResidueClass: return "WrongResidueClass";
    case ErrorCode::NotInFamily: return "NotInFamily";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonMonomialDenominator: return "NonMonomialDenominator";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    }
    return "Unknown";
  }

} // namespace ctk
