#include "transportlab/core/error.hpp"

namespace transportlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidMargins: return "InvalidMargins";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotInPolytope: return "NotInPolytope";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooLargeForExactCheck: return "TooLargeForExactCheck";
    case ErrorKind::TooMany: return "TooMany";
    case ErrorKind::LemmaOutOfRange: return "LemmaOutOfRange";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::InvalidAlpha: return "InvalidAlpha";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::NeedMoreSamples: return "NeedMoreSamples";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace transportlab
