#pragma once

#include <stdexcept>
#include <string>

namespace qdyn {

/// Mathematical failure: division by zero, a split element, degree cap, ...
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the inverse of a nonzero element is requested but its norm
/// vanishes, i.e. the algebra is not a division ring for these parameters.
class SplitError : public MathError {
 public:
  using MathError::MathError;
};

class DegreeCapError : public MathError {
 public:
  using MathError::MathError;
};

/// Operands live in different fields or algebras.
class SpecMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qdyn
