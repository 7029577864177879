#pragma once

#include <stdexcept>
#include <string>

namespace gammapos {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad permutation strings, out-of-range descent sets,
/// dimension mismatches, faces that are not faces.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A requested size exceeds the configured enumeration/complexity bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The degree bound passed for a palindromicity test is below the degree.
class DegreeBoundError : public Error {
 public:
  using Error::Error;
};

/// gamma_expand was handed a polynomial that is not palindromic.
class PalindromicityError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Schur expansion left a nonzero residual.
class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace gammapos
