#pragma once

#include <stdexcept>
#include <string>

namespace ssetkit {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** A numeric argument lies outside the range an operation accepts. */
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/** A partial assignment names a symbol outside a variable's alphabet. */
class InvalidAssignmentError : public Error {
 public:
  explicit InvalidAssignmentError(const std::string& what) : Error(what) {}
};

/** The operation needs a kind of sample space (usually binary) it was not given. */
class UnsupportedSpaceError : public Error {
 public:
  explicit UnsupportedSpaceError(const std::string& what) : Error(what) {}
};

/** Vector or matrix dimensions do not agree. */
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/** An exhaustive procedure was asked to run beyond its size guard. */
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

/** A cover does not reach every point it is required to reach. */
class CoverageError : public Error {
 public:
  explicit CoverageError(const std::string& what) : Error(what) {}
};

/** An operation was called on an input violating its stated precondition. */
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/** Malformed textual input (rationals, digit strings, JSON documents). */
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace ssetkit
