#pragma once

#include <stdexcept>
#include <string>

namespace miso {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// 0 is (numerically) an eigenvalue where an invertible matrix is required.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue sits on the closed negative real axis, where the principal
/// logarithm is undefined.
class BranchCut : public Error {
 public:
  using Error::Error;
};

/// 1 lies (numerically) in the spectrum of a generator, so the Cayley
/// transform is undefined.
class ResolventViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix, weight or config file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace miso
