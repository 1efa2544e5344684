#pragma once

#include <stdexcept>
#include <string>

namespace sturmian {

enum class ErrorKind {
  invalid_argument,
  invalid_denominator,
  unsupported,
  ambiguous_coding,
  horizon_exceeded,
  empty_window,
  inconclusive,
  undecidable,
  insufficient_profile,
  budget_exceeded,
  invalid_rotation,
  internal_consistency,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure the library reports carries a kind so that callers (the CLI
/// in particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sturmian
