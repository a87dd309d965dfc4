#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geohull {

enum class ErrorCode {
  InvalidEdge,
  InvalidVertex,
  Disconnected,
  EmptyGraph,
  InvalidOrdering,
  InvalidInstance,
  NotAWitness,
  TooLarge,
  BudgetExceeded,
  IoError,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the hull-number search when the evaluation budget runs out.
// lower_bound is the smallest size not yet ruled out.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t lower_bound, std::size_t evaluations)
      : Error(ErrorCode::BudgetExceeded,
              "node budget exhausted after " + std::to_string(evaluations) +
                  " hull evaluations; hull number >= " + std::to_string(lower_bound)),
        lower_bound_(lower_bound) {}

  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::size_t lower_bound_;
};

}  // namespace geohull
