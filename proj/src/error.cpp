#include "nsalg/error.hpp"

namespace nsalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedMonomial: return "MalformedMonomial";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::UnboundOpSymbol: return "UnboundOpSymbol";
    case ErrorCode::ArityOutOfRange: return "ArityOutOfRange";
    case ErrorCode::UnsupportedScheme: return "UnsupportedScheme";
    case ErrorCode::NotAnticommutative: return "NotAnticommutative";
    case ErrorCode::MissingProduct: return "MissingProduct";
    case ErrorCode::MissingModuleProduct: return "MissingModuleProduct";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotEndomorphism: return "NotEndomorphism";
    case ErrorCode::NotNijenhuis: return "NotNijenhuis";
    case ErrorCode::NotRelativeRB: return "NotRelativeRB";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::InvalidCocycle: return "InvalidCocycle";
    case ErrorCode::NotTwistedRB: return "NotTwistedRB";
    case ErrorCode::GraphNotClosed: return "GraphNotClosed";
    case ErrorCode::NotNSAlgebra: return "NotNSAlgebra";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace nsalg
