#pragma once

#include <optional>

#include "pumpkin/digraph.hpp"

namespace pumpkin {

enum class PumpkinViolation {
  SourceEqualsSink,
  BadSourceDegree,
  BadSinkDegree,
  BadInternalDegree,
  Unreachable,
  DirectEdgeWithInternals,
  NoPath,
};

const char* to_string(PumpkinViolation v);

struct PumpkinVerdict {
  bool is_pumpkin = false;
  std::optional<PumpkinViolation> violation;
  VertexId witness = -1;  // offending vertex for the per-vertex violations

  static PumpkinVerdict ok() { return {true, std::nullopt, -1}; }
  static PumpkinVerdict fail(PumpkinViolation why, VertexId w = -1) {
    return {false, why, w};
  }
};

/// Decides whether g is a pumpkin with source s and sink t: a union of
/// induced s->t paths whose internal vertices are pairwise disjoint.
///
/// The structural characterization used here: g is such a union iff
///   (i)   s != t,
///   (ii)  deg-(s) = 0 and deg+(t) = 0,
///   (iii) every other vertex has deg- = deg+ = 1,
///   (iv)  every vertex is reachable from s,
///   (v)   if the arc (s,t) exists, s and t are the only vertices
///         (a direct arc is a chord of any longer path).
/// The reported violation is the first failed condition in this order;
/// per-vertex violations name the smallest offending id.
PumpkinVerdict check_pumpkin(const Digraph& g, VertexId s, VertexId t);

inline bool is_pumpkin(const Digraph& g, VertexId s, VertexId t) {
  return check_pumpkin(g, s, t).is_pumpkin;
}

}  // namespace pumpkin
