#pragma once

#include <stdexcept>
#include <string>

namespace symbreak {

// Base class for all library-specific failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force step would exceed the configured enumeration cap
// (group order, orbit size, or assignment-space bit width).
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// A coset/stabilizer operation was asked for H <= G but some generator
// of H is not an element of G.
class NotSubgroupError : public Error {
 public:
  using Error::Error;
};

// No structural predicate generator applies and the group is too large
// for the per-element fallback.
class IntractableError : public Error {
 public:
  using Error::Error;
};

// Unit propagation failed to fix all auxiliary variables, i.e. the
// predicate violates the functional-determination invariant.
class PropagationStuckError : public Error {
 public:
  using Error::Error;
};

// An orbit contained no assignment accepted by a supposedly complete
// predicate evaluator.
class OracleIncompleteError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (cycle notation, DIMACS, edge lists, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Mismatched degrees/lengths between objects that must agree.
class DegreeMismatchError : public Error {
 public:
  using Error::Error;
};

// A domain type's invariant does not hold for the given data.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace symbreak
