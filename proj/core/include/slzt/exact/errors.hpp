#pragma once

#include <stdexcept>
#include <string>

namespace slzt {

// Raised when a stored truncation cannot decide the requested quantity.
// Callers treat this as "inconclusive", never as a negative answer.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDivisorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An identity that must hold by construction failed. Always a bug.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace slzt
