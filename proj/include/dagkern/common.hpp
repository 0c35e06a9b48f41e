#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dagkern {

// Base for everything the library throws on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Source/target objects do not line up (compose, subobject comparisons, ...).
class ObjectMismatch : public Error {
 public:
  using Error::Error;
};

// A payload fails its instance's validity invariant (duplicate labels,
// non-injective table, dimension mismatch, element outside the algebra).
class InvalidMorphism : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured guard.
class EnumerationGuard : public Error {
 public:
  using Error::Error;
};

// A derived construction failed a proof obligation it relies on
// (fill-in triangles, two-route agreements, closure of element lists).
class LogicError : public Error {
 public:
  using Error::Error;
};

// Instance files / CLI input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Hard cap on enumerated homsets and lattice closures.
inline constexpr std::size_t kEnumerationGuard = std::size_t{1} << 20;

}  // namespace dagkern
