#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kritwahl {

enum class ErrorCode {
  DegenerateInstance,
  DuplicateLabel,
  InvalidLabel,
  IndexOutOfRange,
  SelfComparison,
  Contradiction,
  Incomplete,
  EmptyLog,
  StalePair,
  ShapeMismatch,
  ScoreOutOfRange,
  NoScores,
  ParseError,
  SchemaVersionUnsupported,
  InvalidArgument,
  Overflow,
  NotFound,
  SessionExists,
};

std::string_view to_string(ErrorCode code);

// Every domain failure surfaces as this exception. `code()` is the stable
// machine-readable name used by the CLI and the HTTP error bodies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when accepting a comparison would close a cycle. `path()` is a
// preference chain path[0] > path[1] > ... > path.back() that already holds
// and runs from the rejected comparison's loser to its winner.
class ContradictionError : public Error {
 public:
  ContradictionError(const std::string& message, std::vector<std::size_t> path)
      : Error(ErrorCode::Contradiction, message), path_(std::move(path)) {}

  const std::vector<std::size_t>& path() const noexcept { return path_; }

 private:
  std::vector<std::size_t> path_;
};

}  // namespace kritwahl
