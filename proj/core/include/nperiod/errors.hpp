#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nperiod {

/// Runtime failure inside a computation (as opposed to a rejected argument,
/// which is reported with std::invalid_argument).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nonlinearity produced a non-finite value. Carries the time-grid index
/// that was being evaluated, or npos when the evaluation was not on a grid.
class EvaluationError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit EvaluationError(const std::string& what, std::size_t time_index = npos)
      : Error(what), time_index_(time_index) {}

  std::size_t time_index() const noexcept { return time_index_; }

 private:
  std::size_t time_index_;
};

}  // namespace nperiod
