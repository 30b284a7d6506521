#pragma once

#include <stdexcept>

#include "pumpkin/digraph.hpp"

namespace pumpkin {

/// A deletion set certifying a YES answer; sorted ascending, never
/// containing the source or sink of the owning instance.
using Solution = std::vector<VertexId>;

/// One restricted deletion subproblem: decide whether at most k vertices can
/// be deleted from g so that the remainder is a pumpkin with source s and
/// sink t.  s and t are never deletable.  k may go negative transiently
/// during branching; s != t and both alive always hold.
struct Instance {
  Digraph g;
  int k = 0;
  VertexId s = 0;
  VertexId t = 0;

  Instance(Digraph graph, int budget, VertexId source, VertexId sink)
      : g(std::move(graph)), k(budget), s(source), t(sink) {
    if (!g.is_alive(s)) throw DeadVertexError(s);
    if (!g.is_alive(t)) throw DeadVertexError(t);
    if (s == t) throw std::invalid_argument("source equals sink");
  }
};

}  // namespace pumpkin
