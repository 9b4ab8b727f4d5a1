#pragma once

#include <stdexcept>
#include <string>

namespace lucky13 {

// Bad caller input: malformed profile, bet, offer, or probability.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation not permitted in the current game state (pool exhausted, game over).
class StateConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lucky13
