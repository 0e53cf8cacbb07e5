#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wdq {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input that could not be parsed at all (broken JSON, schema mismatch).
struct ParseError : Error {
  explicit ParseError(const std::string& what, std::size_t line = 0,
                      std::size_t column = 0)
      : Error(what), line(line), column(column) {}

  std::size_t line;    // 1-based, 0 when unknown
  std::size_t column;  // 1-based, 0 when unknown
};

/// A session log line that is syntactically or referentially broken.
struct SessionFormatError : Error {
  SessionFormatError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}

  std::size_t line;  // 1-based line in the session log
};

/// No navigable walk exists between the requested categories.
struct UnreachableError : Error {
  using Error::Error;
};

/// A session claims a walk shorter than the graph allows; the log is
/// corrupt or was recorded against a different directory.
struct InconsistentSessionError : Error {
  using Error::Error;
};

}  // namespace wdq
