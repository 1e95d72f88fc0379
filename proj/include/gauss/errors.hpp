#pragma once

#include <stdexcept>
#include <string>

namespace gauss {

/// Shape problems: non-square, odd dimension, mismatched mode counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter outside the allowed range (negative time, negative occupancy, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation requested on the wrong bath kind or an unphysical state.
class KindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The truncated Fock basis ran out of headroom at `time()`.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gauss
