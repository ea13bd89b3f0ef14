#pragma once

#include <stdexcept>
#include <string>

namespace jordanlab {

enum class ErrorCode {
  NotSymmetric,
  NotSkew,
  NotHomogeneous,
  MalformedWord,
  MissingAssignment,
  ParseError,
  ResourceCap,
  CacheCorrupt,
  RecursionCapExceeded,
  NotLiftable,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Process exit codes used by the CLI.
// 0 success, 1 verified property failed, 2 parse error, 3 resource cap.
int exit_code_for(ErrorCode c);

}  // namespace jordanlab
