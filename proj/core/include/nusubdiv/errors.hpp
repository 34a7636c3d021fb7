#pragma once

#include <stdexcept>
#include <string>

namespace nusubdiv {

// Thrown when an operation would exceed a configured size or step guard.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a rewriting step would introduce a squared generator.
class DuplicateGeneratorError : public std::logic_error {
 public:
  explicit DuplicateGeneratorError(const std::string& what) : std::logic_error(what) {}
};

// Thrown when a flow polytope is requested for a graph with a directed cycle.
class CycleError : public std::runtime_error {
 public:
  explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a simplex handed to a volume check has linearly dependent edges.
class DegenerateSimplexError : public std::runtime_error {
 public:
  explicit DegenerateSimplexError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nusubdiv
