#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smul {

enum class ErrorKind {
  UnsupportedDivisibility,
  NoIdempotent,
  NotAHomomorphism,
  NotAnIdeal,
  ZeroRing,
  TooLarge,
  ContainsZero,
  NotSurjective,
  NotPrime,
  NotDisjoint,
  NotApplicable,
  DegenerateChain,
  IndexOutOfBound,
  UnsupportedFamily,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure the library reports carries one of the kinds above so that
/// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace smul
