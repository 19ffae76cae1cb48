#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace berge {

enum class ErrorCode {
  InvalidArgument,
  VertexOutOfRange,
  DuplicateVertexInEdge,
  EmptyHyperedge,
  MalformedLine,
  Io,
  Overflow,
  UndefinedWeight,
  NegativeWeight,
  ExceedsCap,
  BudgetExhausted,
  PreconditionViolated,
};

auto to_string(ErrorCode code) -> const char*;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  auto code() const noexcept -> ErrorCode { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the Ramsey search when no value at or below the cap exists.
/// `lower_bound` is the smallest value still possible (cap + 1).
class ExceedsCapError : public Error {
 public:
  ExceedsCapError(int lower_bound, const std::string& what)
      : Error(ErrorCode::ExceedsCap, what), lower_bound_(lower_bound) {}

  auto lower_bound() const noexcept -> int { return lower_bound_; }

 private:
  int lower_bound_;
};

}  // namespace berge
