#pragma once

#include <stdexcept>
#include <string>

namespace fisherq {

// Argument outside the domain of a closed form (zero moment, non-negative
// multiplier where a negative one is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Finite-difference step collapsed (underflow near a domain boundary).
class NumericPrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reference eigensolver failed its refinement test.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double shift)
      : std::runtime_error(what), shift_(shift) {}

  double shift() const { return shift_; }

 private:
  double shift_;
};

// A state that the algorithms guarantee cannot happen (e.g. a lost bracket).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fisherq
