#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transportlab {

enum class ErrorKind {
  InvalidInput,
  InvalidMargins,
  Infeasible,
  NotInPolytope,
  TooLarge,
  TooLargeForExactCheck,
  TooMany,
  LemmaOutOfRange,
  Degenerate,
  InvalidAlpha,
  NotGeneric,
  NeedMoreSamples,
  BoundViolated,
  BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers (and the
/// CLI exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for the size guards that refuse work instead of truncating it.
  bool is_guard() const noexcept {
    return kind_ == ErrorKind::TooLarge || kind_ == ErrorKind::TooLargeForExactCheck ||
           kind_ == ErrorKind::TooMany;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace transportlab
