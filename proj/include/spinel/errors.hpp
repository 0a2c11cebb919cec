#pragma once

#include <stdexcept>
#include <string>

namespace spinel {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ill-typed term construction or an ill-typed internal state.
struct TypeError : Error {
  using Error::Error;
};

// A configurable work budget was exhausted (normalization step budget,
// scheduler deadline). Well-typed input never hits this in practice.
struct ResourceLimitError : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(int line, int col, const std::string& expected, const std::string& got)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) +
              ": expected " + expected + ", got " + got),
        line(line), col(col), expected(expected) {}
  int line;
  int col;
  std::string expected;
};

struct IncludeNotFoundError : Error {
  explicit IncludeNotFoundError(const std::string& path)
      : Error("include file not found: " + path), path(path) {}
  std::string path;
};

struct UndeclaredSymbolError : Error {
  using Error::Error;
};

// Parsed constructs the kernel has no encoding for (e.g. TPTP arithmetic).
struct UnsupportedError : Error {
  using Error::Error;
};

struct DialectMismatchError : Error {
  using Error::Error;
};

struct DuplicateStoreError : Error {
  using Error::Error;
};
struct UnknownStoreError : Error {
  using Error::Error;
};
struct UnknownContextError : Error {
  using Error::Error;
};
struct AlreadySplitError : Error {
  using Error::Error;
};
struct ClosedContextError : Error {
  using Error::Error;
};
struct NotALeafError : Error {
  using Error::Error;
};

struct NotInNnfError : Error {
  using Error::Error;
};
struct PositionMismatchError : Error {
  using Error::Error;
};

}  // namespace spinel
