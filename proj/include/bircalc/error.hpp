#pragma once

#include <stdexcept>
#include <string>

namespace bircalc {

/// A well-formed request outside the domain of an operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal text (polynomials, words, permutations, numbers).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bircalc
