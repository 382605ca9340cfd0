#pragma once

#include <stdexcept>
#include <string>

namespace clawham {

enum class ErrorCode {
  kInvalidInput = 1,
  kPrecondition = 2,
  kInconclusive = 3,
  kTheoremViolation = 4,
  kInternal = 5,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace clawham
