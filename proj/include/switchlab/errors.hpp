#pragma once

#include <stdexcept>
#include <string>

namespace switchlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  enum class Kind { EmptyInput, NonIntegerToken, NegativeDegree, BadFormat };
  Kind kind;
  ParseError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

struct NotGraphicalError : Error {
  using Error::Error;
};

// A splitted sequence with no split-graph realization.
struct NotSplitError : Error {
  using Error::Error;
};

struct BoundExceededError : Error {
  long long partial_count;  // realizations seen before giving up, -1 if n/a
  explicit BoundExceededError(const std::string& what, long long partial = -1)
      : Error(what), partial_count(partial) {}
};

struct InvalidSwitchError : Error {
  using Error::Error;
};

struct InvalidPartitionError : Error {
  using Error::Error;
};

}  // namespace switchlab
