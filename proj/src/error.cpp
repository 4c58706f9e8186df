#include "wgideal/error.hpp"

namespace wgideal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotInDJ: return "NotInDJ";
    case ErrorCode::JNotPositive: return "JNotPositive";
    case ErrorCode::NotWeakAscent: return "NotWeakAscent";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotACell: return "NotACell";
    case ErrorCode::JNotInK: return "JNotInK";
    case ErrorCode::InnerNotVerified: return "InnerNotVerified";
    case ErrorCode::NotABiideal: return "NotABiideal";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace wgideal
