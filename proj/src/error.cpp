#include "tdeg/error.hpp"

namespace tdeg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NegativeLeadingCoefficient: return "NegativeLeadingCoefficient";
    case ErrorKind::NegativeBlock: return "NegativeBlock";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::NonIntegerEntries: return "NonIntegerEntries";
    case ErrorKind::NegativeEntries: return "NegativeEntries";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::BadSupport: return "BadSupport";
    case ErrorKind::NotEnoughPositives: return "NotEnoughPositives";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::BadPositions: return "BadPositions";
    case ErrorKind::ChainNotRealizable: return "ChainNotRealizable";
    case ErrorKind::ClaimFalse: return "ClaimFalse";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace tdeg
