#pragma once

#include <stdexcept>
#include <string>

#include "superpoly/geometry.hpp"

namespace superpoly {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- cluster / polyomino construction ----
struct EmptyClusterError : Error {
  using Error::Error;
};
struct DisconnectedClusterError : Error {
  using Error::Error;
};

// ---- text parsing ----
struct ParseError : Error {
  using Error::Error;
};
struct UnknownColorCharError : ParseError {
  using ParseError::ParseError;
};

// ---- superimposition / layouts ----
struct ColorConflictError : Error {
  ColorConflictError(const std::string& msg, Cell where) : Error(msg), cell(where) {}
  Cell cell;
};
struct IncompatiblePairError : Error {
  IncompatiblePairError(const std::string& msg, int a, int b, Cell where)
      : Error(msg), first(a), second(b), cell(where) {}
  int first;
  int second;
  Cell cell;
};
struct DisconnectedUnionError : Error {
  using Error::Error;
};

// ---- solvers ----
struct EmptyInstanceError : Error {
  using Error::Error;
};
struct SearchSpaceTooLargeError : Error {
  using Error::Error;
};
struct NoValidLayoutError : Error {
  using Error::Error;
};
struct PreconditionViolatedError : Error {
  using Error::Error;
};

// ---- graph-driven instances ----
struct GraphTooSmallError : Error {
  using Error::Error;
};
struct NotAPartitionError : Error {
  using Error::Error;
};
struct PartNotIndependentError : Error {
  PartNotIndependentError(const std::string& msg, int a, int b) : Error(msg), u(a), v(b) {}
  int u;
  int v;
};
struct DeckNotIndependentError : Error {
  DeckNotIndependentError(const std::string& msg, int a, int b) : Error(msg), u(a), v(b) {}
  int u;
  int v;
};
struct TooManyVerticesError : Error {
  using Error::Error;
};
struct PaletteTooLargeError : Error {
  using Error::Error;
};
struct MalformedMacrocellError : Error {
  using Error::Error;
};

// ---- cover-driven instances ----
struct ElementOutOfRangeError : Error {
  using Error::Error;
};
struct NotRulesAbidingError : Error {
  using Error::Error;
};
struct MisalignedElementError : Error {
  MisalignedElementError(const std::string& msg, int el, Offset off)
      : Error(msg), element(el), offset(off) {}
  int element;
  Offset offset;
};
struct WrongSetError : Error {
  WrongSetError(const std::string& msg, int el, int s) : Error(msg), element(el), set(s) {}
  int element;
  int set;
};

// ---- reference solvers ----
struct TooLargeError : Error {
  using Error::Error;
};

}  // namespace superpoly
