#include "pumpkin/oracle.hpp"

#include <algorithm>

namespace pumpkin {

namespace {

// Next bit pattern with the same popcount (Gosper).  For a fixed size,
// increasing mask value enumerates index sets in colexicographic order.
std::uint64_t next_same_popcount(std::uint64_t x) {
  std::uint64_t low = x & -x;
  std::uint64_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

}  // namespace

OracleResult brute_force_rpvds(const Instance& inst) {
  const Digraph& g = inst.g;
  if (g.alive_count() > kOracleRpvdsMaxVertices)
    throw TooLargeError(g.alive_count(), kOracleRpvdsMaxVertices);
  if (inst.k < 0) return {};

  std::vector<VertexId> candidates;
  for (VertexId v : g.vertices())
    if (v != inst.s && v != inst.t) candidates.push_back(v);
  const int m = static_cast<int>(candidates.size());
  const int max_size = std::min(inst.k, m);

  for (int size = 0; size <= max_size; ++size) {
    std::uint64_t mask = (size == 0) ? 0 : (std::uint64_t{1} << size) - 1;
    const std::uint64_t end = std::uint64_t{1} << m;
    for (;;) {
      Solution subset;
      subset.reserve(size);
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) subset.push_back(candidates[i]);
      if (is_pumpkin(g.delete_vertices(subset), inst.s, inst.t))
        return {true, size, std::move(subset)};
      if (size == 0) break;
      mask = next_same_popcount(mask);
      if (mask >= end) break;
    }
  }
  return {};
}

OracleResult brute_force_pvds(const Digraph& g, int k) {
  if (g.alive_count() > kOraclePvdsMaxVertices)
    throw TooLargeError(g.alive_count(), kOraclePvdsMaxVertices);
  if (k < 0) return {};

  OracleResult best;
  const std::vector<VertexId> live = g.vertices();
  const int budget = std::min(k, std::max(0, g.alive_count() - 2));
  for (VertexId s : live) {
    for (VertexId t : live) {
      if (s == t) continue;
      OracleResult r = brute_force_rpvds(Instance(g, budget, s, t));
      if (r.answer && (!best.answer || *r.min_size < *best.min_size))
        best = std::move(r);
      if (best.answer && *best.min_size == 0) return best;
    }
  }
  return best;
}

}  // namespace pumpkin
