#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

// Malformed textual input (words, monomials, polynomials).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that violates a precondition (strand count, index, bounds).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic outside the domain: division by zero, evaluation at a pole.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace skein
