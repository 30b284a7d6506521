#pragma once

#include <stdexcept>
#include <string>

namespace pumpkin {

// Invalid construction or use of a Digraph.
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SelfLoopError : GraphError {
  explicit SelfLoopError(int v)
      : GraphError("self-loop at vertex " + std::to_string(v)) {}
};

struct DuplicateEdgeError : GraphError {
  DuplicateEdgeError(int u, int v)
      : GraphError("duplicate arc " + std::to_string(u) + " -> " +
                   std::to_string(v)) {}
};

struct OutOfRangeError : GraphError {
  OutOfRangeError(int v, int n)
      : GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                   std::to_string(n) + ")") {}
};

struct DeadVertexError : GraphError {
  explicit DeadVertexError(int v)
      : GraphError("vertex " + std::to_string(v) + " is not alive") {}
};

// A pumpkin cannot mix the direct source->sink arc with longer paths.
struct MixedDirectEdgeError : std::runtime_error {
  MixedDirectEdgeError()
      : std::runtime_error(
            "path length 1 cannot be combined with other paths") {}
};

// Brute-force input above the recommended size bound.
struct TooLargeError : std::runtime_error {
  TooLargeError(int n, int bound)
      : std::runtime_error("instance has " + std::to_string(n) +
                           " vertices; brute force is limited to " +
                           std::to_string(bound)) {}
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A branching rule's witness derivation failed although every earlier rule
// was inapplicable.  This is a bug in the rule machinery, never bad input.
struct InternalRuleOrderViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pumpkin
