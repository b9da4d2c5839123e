#pragma once

#include <stdexcept>
#include <string>

namespace coxrh {

enum class ErrorCode {
  NonSymmetric,
  BadDiagonal,
  BadOrder,
  TooLarge,
  IndexOutOfRange,
  EmptySubset,
  HypothesisFailed,
  InvalidJoinSet,
  TooManyCores,
  ParseError,
  ValidationError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

  /// True for errors caused by exceeding the enumeration capacity bounds
  /// (rank cap, Bell-number guard) rather than by malformed input.
  bool is_capacity() const {
    return code_ == ErrorCode::TooLarge || code_ == ErrorCode::TooManyCores;
  }

 private:
  ErrorCode code_;
};

}  // namespace coxrh
