// Precondition violations thrown by the library. Conditions that are ordinary
// outcomes of a query (no solution, not conservative) are empty optionals at
// the call sites instead, never exceptions.
#pragma once

#include <stdexcept>
#include <string>

namespace polyrep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct EmptyGroup : Error {
  using Error::Error;
};

struct SignatureMismatch : Error {
  using Error::Error;
};

struct InvalidFace : Error {
  using Error::Error;
};

struct BoundaryPoint : Error {
  using Error::Error;
};

struct NotSkew : Error {
  using Error::Error;
};

struct ZeroScaling : Error {
  using Error::Error;
};

struct NonFiniteGradient : Error {
  using Error::Error;
};

struct NotVertex : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct SkewViolation : Error {
  using Error::Error;
};

struct BlockConstantViolation : Error {
  using Error::Error;
};

struct ZeroBlockSum : Error {
  using Error::Error;
};

struct BoundaryEscape : Error {
  BoundaryEscape(const std::string& what, double when) : Error(what), time(when) {}
  double time;
};

struct NonFiniteState : Error {
  NonFiniteState(const std::string& what, double when) : Error(what), time(when) {}
  double time;
};

struct BoundarySample : Error {
  using Error::Error;
};

// Game-file problems, with the 1-based line that triggered them.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, int at) : Error(what), line(at) {}
  int line;
};

struct SemanticError : Error {
  SemanticError(const std::string& what, int at) : Error(what), line(at) {}
  int line;
};

}  // namespace polyrep
