#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rednum/polynomial.hpp"

namespace rednum {

/// Syntax or semantic error with the 0-based byte offset where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' INTEGER)?
///   atom   := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
/// Multiplication must be explicit.
Polynomial parse_polynomial(std::string_view text, const RingRef& ring);

}  // namespace rednum
