#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace deltasurf {

// Domain failures carry a stable machine-readable code next to the human
// message; the CLI maps them to structured errors with exit status 1.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::domain_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw DomainError(std::move(code), message);
}

}  // namespace deltasurf
