#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spherebound {

// Bad user input: malformed text, dimension mismatch, parameter outside its
// domain. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial text that does not follow the grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A numerical failure such as a Gram matrix that is not numerically positive
// definite. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spherebound
