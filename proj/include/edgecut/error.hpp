#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace edgecut {

// Domain error with a stable machine-readable code ("loop", "samevertex",
// "overlap", ...). The CLI maps these to exit code 1 and a structured JSON
// error object; library callers can branch on code().
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace edgecut
