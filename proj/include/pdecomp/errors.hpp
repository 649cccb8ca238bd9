#pragma once

#include <stdexcept>
#include <string>

namespace pdecomp {

// Bad caller input: out-of-range ids, invalid distribution parameters, etc.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Malformed graph file or an edge list that is not a valid connected graph.
class GraphFormatError : public std::runtime_error {
 public:
  explicit GraphFormatError(const std::string& what) : std::runtime_error(what) {}
};

// An internal guarantee was violated. Reaching this is a bug.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pdecomp
