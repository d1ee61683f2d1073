#pragma once

#include <stdexcept>
#include <string>

namespace lucastower {

// A caller asked for something outside an operation's domain (n > m, m = 0
// for epsilon, a variable the map does not cover, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed polynomial text or JSON.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Two routes that must agree did not, or a division known to be exact
// failed. Always a defect in this library, never a user error.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace lucastower
