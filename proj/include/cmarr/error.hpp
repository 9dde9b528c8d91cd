#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmarr {

enum class ErrorKind {
  parameter,
  parse,
  division_by_zero,
  degenerate_form,
  size_limit,
  exhausted,
  bad_prime,
  internal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::parse: return "parse";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::degenerate_form: return "degenerate_form";
    case ErrorKind::size_limit: return "size_limit";
    case ErrorKind::exhausted: return "exhausted";
    case ErrorKind::bad_prime: return "bad_prime";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so that front ends can
/// map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace cmarr
