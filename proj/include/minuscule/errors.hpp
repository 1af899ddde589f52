#pragma once

#include <stdexcept>
#include <string>

namespace minuscule {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input references an element/generator outside the valid range.
struct IndexError : Error {
  using Error::Error;
};

// Argument outside the operation's domain (bad rank, non-permutation, ...).
struct DomainError : Error {
  using Error::Error;
};

// A relation set whose closure is not antisymmetric.
struct CycleError : Error {
  using Error::Error;
};

// An enumeration would exceed the configured bound.
struct CapacityError : Error {
  using Error::Error;
};

// Operation requires a rank function the poset does not admit.
struct NotRankedError : Error {
  using Error::Error;
};

// The maximum length in a parabolic quotient is attained more than once.
struct NonUniqueError : Error {
  using Error::Error;
};

struct NotReducedError : Error {
  using Error::Error;
};

struct NotFullyCommutativeError : Error {
  using Error::Error;
};

// Weight index does not carry a minuscule representation for this type.
struct NotMinusculeError : Error {
  using Error::Error;
};

// Element does not lie below the heap's element in left weak order.
struct NotBelowError : Error {
  using Error::Error;
};

// A heap label class meets both even and odd ranks.
struct MixedParityError : Error {
  using Error::Error;
};

// Sieving polynomial does not count the acted-on set.
struct MismatchedSizeError : Error {
  using Error::Error;
};

// A polynomial division expected to be exact left a remainder.  For the
// product formulas this doubles as the non-Gaussian-input diagnostic.
struct InexactDivisionError : Error {
  using Error::Error;
};

// Malformed poset text input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace minuscule
