#pragma once

#include <stdexcept>
#include <string>

namespace dissim {

// Base type for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed document or literal (JSON graphs, families, rational strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Terminals do not lie in a single connected component.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds a configured size cap.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// Operation defined only for a specific family size (e.g. n = 4).
class WrongNError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition of a construction.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A construction failed to reproduce its input family; internal bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Edge reference outside the graph's edge set.
class UnknownEdgeError : public Error {
 public:
  using Error::Error;
};

}  // namespace dissim
