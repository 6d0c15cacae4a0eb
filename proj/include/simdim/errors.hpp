#pragma once

#include <stdexcept>
#include <string>

namespace simdim {

// Library-wide error type.  The kind maps onto the CLI exit codes, so new
// kinds need a corresponding entry in tools/simdim.cpp.
class Error : public std::runtime_error {
public:
  enum Kind {
    invalid_parameter,   // bad argument to an operation
    capacity_exceeded,   // construction would exceed 64 vertices
    unsupported_metric,  // full metric requested on a disconnected graph
    budget_exceeded,     // enumeration would exceed the configured check budget
    parse_error,         // malformed graph file or suite config
  };

  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

  Kind kind;
};

inline Error parse_fail(const std::string& file, int line, const std::string& msg) {
  return Error(Error::parse_error, file + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace simdim
