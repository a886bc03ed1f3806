#include "arbor/error.h"

namespace arbor {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput:
      return "malformed_input";
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kParameter:
      return "parameter";
    case ErrorKind::kInternal:
      return "internal";
    case ErrorKind::kInvariantBroken:
      return "invariant_broken";
    case ErrorKind::kRoutingInfeasible:
      return "routing_infeasible";
    case ErrorKind::kUnsupported:
      return "unsupported";
    case ErrorKind::kScale:
      return "scale";
    case ErrorKind::kHalvingViolation:
      return "halving_violation";
    case ErrorKind::kProperty1Violation:
      return "property1_violation";
  }
  return "unknown";
}

}  // namespace arbor
