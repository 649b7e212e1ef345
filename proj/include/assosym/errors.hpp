#ifndef ASSOSYM_ERRORS_HPP
#define ASSOSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace assosym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a numeric argument was violated.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// The request is outside the range the brute-force routines are allowed to
/// enumerate.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

/// Two operands of different degree were combined.
class DegreeMismatchError : public Error {
public:
  using Error::Error;
};

/// A multidegree contains a zero entry.
class ZeroPartError : public Error {
public:
  using Error::Error;
};

/// Ranks computed over two different fields disagree.
class RankMismatchError : public Error {
public:
  using Error::Error;
};

/// A multiplicity extracted by an inner product is not a non-negative integer.
class NonIntegralityError : public Error {
public:
  using Error::Error;
};

} // namespace assosym

#endif // ASSOSYM_ERRORS_HPP
