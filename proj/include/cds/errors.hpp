#pragma once

#include <stdexcept>
#include <string>

namespace cds {

// Contract violations and refusals surfaced by the library. Expected
// negative outcomes (an infeasible quota, an unreachable target) are
// returned as empty optionals instead, so callers can branch on them.

struct InvalidVertexError : std::out_of_range {
  explicit InvalidVertexError(const std::string& what) : std::out_of_range(what) {}
};

struct SelfLoopError : std::invalid_argument {
  explicit SelfLoopError(const std::string& what) : std::invalid_argument(what) {}
};

struct NonmonotoneProfitError : std::runtime_error {
  explicit NonmonotoneProfitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by exhaustive routines when the instance exceeds their size cap.
struct TooLargeError : std::runtime_error {
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct TooSmallError : std::invalid_argument {
  explicit TooSmallError(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetTooSmallError : std::invalid_argument {
  explicit BudgetTooSmallError(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  int line_number;
};

}  // namespace cds
