#pragma once

#include <stdexcept>
#include <string>

namespace coxforge {

enum class ErrorKind {
  InvalidArgument,
  RankError,
  MustStandardizeFirst,
  UnsupportedFeature,
  NotQuasiProjective,
  NotFound,
  Parse,
};

const char* error_kind_name(ErrorKind kind);

// Input or precondition failure. The CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A runtime-checked internal invariant failed. The CLI maps it to exit code 1.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& message);
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void ensure(bool condition, const char* what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace coxforge
