#pragma once

#include <stdexcept>
#include <string>

namespace delpezzo {

// Base of every error raised by the library. Each subclass is one outcome
// class that the command-line tool maps to a distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, polynomials, points).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain: zero where nonzero is required,
// division by the zero polynomial, a point off its curve.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The linear coefficient f1 of a lifted fiber vanished, so the fiber gives no
// point. Recoverable: pick another point of the auxiliary curve.
class DegenerateFiber : public Error {
 public:
  using Error::Error;
};

// The auxiliary curve E_{a,b} is singular; the group law is unavailable and
// the explicit parametrization of the singular family must be used instead.
class SingularAuxiliary : public Error {
 public:
  using Error::Error;
};

// No usable (non-torsion) seed point on the auxiliary curve.
class NoSeedPoint : public Error {
 public:
  using Error::Error;
};

// Parameter values hit a pole of a rational parametrization.
class ParamPole : public Error {
 public:
  using Error::Error;
};

// An exact identity that must hold failed. Indicates a bug, never bad input.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace delpezzo
