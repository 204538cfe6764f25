#pragma once

#include <stdexcept>
#include <string>

namespace kwise {

enum class ErrorKind {
  InvalidParameter,
  GroundMismatch,
  NotIntersecting,
  NotMaximal,
  CapacityExceeded,
  Parse,
};

/// Domain error raised by every kwise operation. The kind lets callers (the
/// CLI in particular) map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace kwise
