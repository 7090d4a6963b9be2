#pragma once

#include <stdexcept>
#include <string>

namespace permlp {

// Library errors carry a stable machine-readable code; the CLI maps them to
// JSON on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Error invalid_size_error(const std::string& msg) {
  return Error("invalid-size", msg);
}
inline Error dimension_error(const std::string& msg) {
  return Error("dimension-mismatch", msg);
}
inline Error budget_error(const std::string& msg) {
  return Error("budget-exceeded", msg);
}
inline Error membership_error(const std::string& msg) {
  return Error("membership", msg);
}
inline Error decode_failure_error(const std::string& msg) {
  return Error("decode-failure", msg);
}
inline Error invalid_argument_error(const std::string& msg) {
  return Error("invalid-argument", msg);
}
inline Error not_doubly_stochastic_error(const std::string& msg) {
  return Error("not-doubly-stochastic", msg);
}
inline Error parse_error(const std::string& msg) { return Error("parse", msg); }
inline Error io_error(const std::string& msg) { return Error("io", msg); }

}  // namespace permlp
