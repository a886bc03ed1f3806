#ifndef ARBOR_ERROR_H_
#define ARBOR_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace arbor {

enum class ErrorKind {
  kMalformedInput,
  kParse,
  kParameter,
  kInternal,
  kInvariantBroken,
  kRoutingInfeasible,
  kUnsupported,
  kScale,
  kHalvingViolation,
  kProperty1Violation,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception type; `kind`
// lets the CLI map failures onto exit codes and machine-readable reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorKind::kParse,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// Internal-consistency check that stays on in release builds.
inline void Check(bool condition, const std::string& message) {
  if (!condition) Fail(ErrorKind::kInternal, message);
}

}  // namespace arbor

#endif  // ARBOR_ERROR_H_
