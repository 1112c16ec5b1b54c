#pragma once

#include <stdexcept>
#include <string>

namespace gca {

// Domain error: bad vertices, violated preconditions, non-admissible pairs.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text or JSON shape (as opposed to well-formed data that
// violates a graph invariant, which is a plain Error).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the witness builder when the requested vertex lies outside the
// saturated left-infinite region, where no constructive recursion exists.
// The CLI maps this to its own exit code so callers can tell it apart from
// ordinary domain errors.
class WitnessUnavailableError : public Error {
 public:
  explicit WitnessUnavailableError(const std::string& what) : Error(what) {}
};

}  // namespace gca
