#pragma once

#include <stdexcept>
#include <string>

namespace borderidx {

// Malformed input: bad JSON, schema violation, inconsistent dimensions.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input parsed but does not denote a valid order ideal (closure violation,
// bad partition, empty ideal where a nonempty one is required).
struct InvalidIdealError : std::runtime_error {
  explicit InvalidIdealError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace borderidx
