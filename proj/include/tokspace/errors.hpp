#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "tokspace/symbol.hpp"

namespace tokspace {

/// Domain error with a stable code (used by the CLI for exit status and
/// by tests to pin failure causes) and an optional witness token.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  Error(std::string code, const std::string& msg, Token witness)
      : std::runtime_error(code + ": " + msg + " [witness " + witness.str() + "]"),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const std::optional<Token>& witness() const { return witness_; }

 private:
  std::string code_;
  std::optional<Token> witness_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}
[[noreturn]] inline void fail(std::string code, const std::string& msg, Token w) {
  throw Error(std::move(code), msg, std::move(w));
}

}  // namespace tokspace
