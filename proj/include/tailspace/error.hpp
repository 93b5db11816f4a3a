#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tailspace {

/// All preconditions and capacity limits surface as Error.  `code` is a short
/// stable token (e.g. "capacity", "dimension-mismatch", "search-exhausted")
/// that the CLI prints as the machine-parsable failure reason.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool cond, const std::string& code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace tailspace
