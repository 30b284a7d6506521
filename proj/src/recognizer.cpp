#include "pumpkin/recognizer.hpp"

#include <algorithm>

namespace pumpkin {

const char* to_string(PumpkinViolation v) {
  switch (v) {
    case PumpkinViolation::SourceEqualsSink:
      return "SourceEqualsSink";
    case PumpkinViolation::BadSourceDegree:
      return "BadSourceDegree";
    case PumpkinViolation::BadSinkDegree:
      return "BadSinkDegree";
    case PumpkinViolation::BadInternalDegree:
      return "BadInternalDegree";
    case PumpkinViolation::Unreachable:
      return "Unreachable";
    case PumpkinViolation::DirectEdgeWithInternals:
      return "DirectEdgeWithInternals";
    case PumpkinViolation::NoPath:
      return "NoPath";
  }
  return "?";
}

PumpkinVerdict check_pumpkin(const Digraph& g, VertexId s, VertexId t) {
  if (!g.is_alive(s)) throw DeadVertexError(s);
  if (!g.is_alive(t)) throw DeadVertexError(t);

  if (s == t) return PumpkinVerdict::fail(PumpkinViolation::SourceEqualsSink);
  if (g.in_degree(s) != 0)
    return PumpkinVerdict::fail(PumpkinViolation::BadSourceDegree, s);
  if (g.out_degree(t) != 0)
    return PumpkinVerdict::fail(PumpkinViolation::BadSinkDegree, t);

  for (VertexId v = 0; v < g.capacity(); ++v) {
    if (!g.is_alive(v) || v == s || v == t) continue;
    if (g.in_degree(v) != 1 || g.out_degree(v) != 1)
      return PumpkinVerdict::fail(PumpkinViolation::BadInternalDegree, v);
  }

  std::vector<VertexId> reach = g.reachable_from(s);
  if (!std::binary_search(reach.begin(), reach.end(), t))
    return PumpkinVerdict::fail(PumpkinViolation::NoPath);
  if (static_cast<int>(reach.size()) != g.alive_count()) {
    for (VertexId v = 0; v < g.capacity(); ++v)
      if (g.is_alive(v) && !std::binary_search(reach.begin(), reach.end(), v))
        return PumpkinVerdict::fail(PumpkinViolation::Unreachable, v);
  }

  if (g.has_edge(s, t) && g.alive_count() > 2)
    return PumpkinVerdict::fail(PumpkinViolation::DirectEdgeWithInternals);

  return PumpkinVerdict::ok();
}

}  // namespace pumpkin
