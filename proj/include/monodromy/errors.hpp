#pragma once

#include <stdexcept>
#include <string>

namespace monodromy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zero or imprimitive vector where a primitive one is required.
class InvalidVector : public Error {
 public:
  using Error::Error;
};

/// Determinant is not +1 (or not +-1 for GL2 entry points).
class NotSL2 : public Error {
 public:
  using Error::Error;
};

/// No transvection factorization of the identity has this length.
class NotRealizable : public Error {
 public:
  using Error::Error;
};

/// Tuple decoration or length does not fit the requested action.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Entries do not multiply to the identity.
class ProductError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace monodromy
