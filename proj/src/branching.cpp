#include "pumpkin/branching.hpp"

#include <algorithm>
#include <set>

namespace pumpkin {

RuleId RuleId::from_code(int code) {
  if (code == 0) return {1, false};
  return {(code + 3) / 2, code % 2 == 0};
}

const std::vector<int>& guaranteed_vector(int rule_index) {
  static const std::vector<int> table[] = {
      {1, 1},           // (1)
      {1, 1},           // (2)
      {1, 3, 3, 3, 3},  // (3)
      {1, 1},           // (4)
      {1, 1},           // (5)
      {1, 3, 3, 2},     // (6)
      {1, 2, 2},        // (7)
      {1, 2, 2},        // (8)
  };
  return table[rule_index - 1];
}

namespace {

std::vector<VertexId> sorted_set(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<VertexId> without(const std::vector<VertexId>& sorted,
                              VertexId drop) {
  std::vector<VertexId> out;
  out.reserve(sorted.size());
  for (VertexId v : sorted)
    if (v != drop) out.push_back(v);
  return out;
}

bool internal(VertexId v, VertexId s, VertexId t) { return v != s && v != t; }

// (1): an antiparallel pair; branch on either endpoint.  The smallest
// ordered pair (u, w), u < w, with both arcs present.
std::optional<BranchDecision> try_rule1(const Digraph& g) {
  for (VertexId u = 0; u < g.capacity(); ++u) {
    if (!g.is_alive(u)) continue;
    for (VertexId w : g.out_neighbors(u))
      if (w > u && g.has_edge(w, u))
        return BranchDecision{{1, false}, u, {{u}, {w}}};
  }
  return std::nullopt;
}

// (2): v with two or more out-neighbors, one of them t.  If v survives,
// everything it points at besides t must go.
std::optional<BranchDecision> try_rule2(const Digraph& g, VertexId s,
                                        VertexId t) {
  for (VertexId v = 0; v < g.capacity(); ++v) {
    if (!g.is_alive(v) || !internal(v, s, t)) continue;
    if (g.out_degree(v) >= 2 && g.has_edge(v, t))
      return BranchDecision{{2, false}, v, {{v}, without(g.out_neighbors(v), t)}};
  }
  return std::nullopt;
}

// (3): out-degree at least 4; a surviving v keeps exactly one of any four
// chosen out-neighbors.  The four smallest are chosen.
std::optional<BranchDecision> try_rule3(const Digraph& g, VertexId s,
                                        VertexId t) {
  for (VertexId v = 0; v < g.capacity(); ++v) {
    if (!g.is_alive(v) || !internal(v, s, t)) continue;
    if (g.out_degree(v) < 4) continue;
    const auto& outs = g.out_neighbors(v);
    std::vector<VertexId> w(outs.begin(), outs.begin() + 4);
    BranchDecision d{{3, false}, v, {{v}}};
    for (int keep = 0; keep < 4; ++keep) d.sets.push_back(without(w, w[keep]));
    return d;
  }
  return std::nullopt;
}

// (4): v with out-degree >= 2 and an out-neighbor w of in-degree 1.  If w
// survives so does v, and then the rest of N+(v) must go.
std::optional<BranchDecision> try_rule4(const Digraph& g, VertexId s,
                                        VertexId t) {
  for (VertexId v = 0; v < g.capacity(); ++v) {
    if (!g.is_alive(v) || !internal(v, s, t)) continue;
    if (g.out_degree(v) < 2) continue;
    for (VertexId w : g.out_neighbors(v))
      if (g.in_degree(w) == 1)
        return BranchDecision{{4, false}, v, {{w}, without(g.out_neighbors(v), w)}};
  }
  return std::nullopt;
}

// (5): w1, w2 in N+(v) with the arc (w1, w2) and N+(w1) = {w2}.  A solution
// avoiding v must delete w1.
std::optional<BranchDecision> try_rule5(const Digraph& g, VertexId s,
                                        VertexId t) {
  for (VertexId v = 0; v < g.capacity(); ++v) {
    if (!g.is_alive(v) || !internal(v, s, t)) continue;
    for (VertexId w1 : g.out_neighbors(v)) {
      if (g.out_degree(w1) != 1) continue;
      VertexId w2 = g.out_neighbors(w1).front();
      if (g.has_edge(v, w2))
        return BranchDecision{{5, false}, v, {{v}, {w1}}};
    }
  }
  return std::nullopt;
}

// (6): out-degree exactly 3 with at least two out-neighbors that have an
// in-neighbor outside N+(v) + v.  If v survives, exactly one out-neighbor
// survives, and the survivor's other in-neighbors must go.
std::optional<BranchDecision> try_rule6(const Digraph& g, VertexId s,
                                        VertexId t) {
  for (VertexId v = 0; v < g.capacity(); ++v) {
    if (!g.is_alive(v) || !internal(v, s, t)) continue;
    if (g.out_degree(v) != 3) continue;
    const auto& outs = g.out_neighbors(v);
    std::vector<VertexId> qualifying;
    for (VertexId w : outs) {
      bool external = false;
      for (VertexId u : g.in_neighbors(w))
        if (u != v && !std::binary_search(outs.begin(), outs.end(), u)) {
          external = true;
          break;
        }
      if (external) qualifying.push_back(w);
    }
    if (qualifying.size() < 2) continue;
    const VertexId w1 = qualifying[0];
    const VertexId w2 = qualifying[1];
    VertexId w3 = -1;
    for (VertexId w : outs)
      if (w != w1 && w != w2) w3 = w;

    std::vector<VertexId> s2{w2, w3};
    for (VertexId u : g.in_neighbors(w1))
      if (u != v) s2.push_back(u);
    std::vector<VertexId> s3{w1, w3};
    for (VertexId u : g.in_neighbors(w2))
      if (u != v) s3.push_back(u);
    return BranchDecision{
        {6, false}, v, {{v}, sorted_set(s2), sorted_set(s3), {w1, w2}}};
  }
  return std::nullopt;
}

// (7): out-degree exactly 3, with N+(v) = {w1, w2, w3} labeled so that
// N-(w2) = {v, w1}.  Rules (1), (4) and (6) being inapplicable guarantee
// such a labeling; the lexicographically smallest (w1, w2, w3) is taken.
std::optional<BranchDecision> try_rule7(const Digraph& g, VertexId s,
                                        VertexId t) {
  for (VertexId v = 0; v < g.capacity(); ++v) {
    if (!g.is_alive(v) || !internal(v, s, t)) continue;
    if (g.out_degree(v) != 3) continue;
    const auto& outs = g.out_neighbors(v);
    for (VertexId w1 : outs) {
      for (VertexId w2 : outs) {
        if (w2 == w1) continue;
        const auto& ins = g.in_neighbors(w2);
        if (ins.size() != 2) continue;
        if (!std::binary_search(ins.begin(), ins.end(), v) ||
            !std::binary_search(ins.begin(), ins.end(), w1))
          continue;
        VertexId w3 = -1;
        for (VertexId w : outs)
          if (w != w1 && w != w2) w3 = w;
        std::vector<VertexId> s3{v};
        for (VertexId u : g.out_neighbors(w1))
          if (u != w2) s3.push_back(u);
        if (s3.size() < 2) return std::nullopt;  // rule (5) was applicable
        return BranchDecision{
            {7, false},
            v,
            {{w2}, {std::min(w1, w3), std::max(w1, w3)}, sorted_set(s3)}};
      }
    }
  }
  return std::nullopt;
}

// (8): among the internal vertices of out-degree exactly 2, take the one
// closest to s (ties by id); label N+(v) = {w1, w2} with (w1, w2) not an
// arc.  w2's second in-neighbor x has out-degree 2; y is x's second
// out-neighbor, and the minimal-distance choice of v forces y != v.
std::optional<BranchDecision> try_rule8(const Digraph& g, VertexId s,
                                        VertexId t) {
  const std::vector<int> dist = g.bfs_distances(s);
  VertexId v = -1;
  for (VertexId u = 0; u < g.capacity(); ++u) {
    if (!g.is_alive(u) || !internal(u, s, t)) continue;
    if (g.out_degree(u) != 2) continue;
    if (v == -1) {
      v = u;
      continue;
    }
    const bool u_reach = dist[u] >= 0;
    const bool v_reach = dist[v] >= 0;
    if (u_reach && (!v_reach || dist[u] < dist[v])) v = u;
  }
  if (v == -1) return std::nullopt;

  const auto& outs = g.out_neighbors(v);
  VertexId w1, w2;
  if (!g.has_edge(outs[0], outs[1])) {
    w1 = outs[0];
    w2 = outs[1];
  } else if (!g.has_edge(outs[1], outs[0])) {
    w1 = outs[1];
    w2 = outs[0];
  } else {
    return std::nullopt;  // antiparallel pair: rule (1) territory
  }

  if (g.in_degree(w2) != 2) return std::nullopt;
  VertexId x = -1;
  for (VertexId u : g.in_neighbors(w2))
    if (u != v) x = u;
  if (g.out_degree(x) != 2) return std::nullopt;
  VertexId y = -1;
  for (VertexId u : g.out_neighbors(x))
    if (u != w2) y = u;
  if (y == v) return std::nullopt;

  return BranchDecision{{8, false},
                        v,
                        {{w2},
                         {std::min(w1, x), std::max(w1, x)},
                         {std::min(v, y), std::max(v, y)}}};
}

std::optional<BranchDecision> try_rule(int index, const Digraph& g, VertexId s,
                                       VertexId t) {
  switch (index) {
    case 1: return try_rule1(g);
    case 2: return try_rule2(g, s, t);
    case 3: return try_rule3(g, s, t);
    case 4: return try_rule4(g, s, t);
    case 5: return try_rule5(g, s, t);
    case 6: return try_rule6(g, s, t);
    case 7: return try_rule7(g, s, t);
    case 8: return try_rule8(g, s, t);
  }
  return std::nullopt;
}

// Raw guard for the two rules whose witness derivation goes beyond the
// guard itself: a failed derivation under a holding guard is a bug.
bool raw_guard(int index, const Digraph& g, VertexId s, VertexId t) {
  if (index != 7 && index != 8) return false;
  const int degree = index == 7 ? 3 : 2;
  for (VertexId v = 0; v < g.capacity(); ++v)
    if (g.is_alive(v) && internal(v, s, t) && g.out_degree(v) == degree)
      return true;
  return false;
}

std::optional<BranchDecision> run_rule(const RuleId& id, const Instance& inst,
                                       const Digraph& rev) {
  std::optional<BranchDecision> d =
      id.primed ? try_rule(id.index, rev, inst.t, inst.s)
                : try_rule(id.index, inst.g, inst.s, inst.t);
  if (d) d->rule = id;
  return d;
}

void validate_decision(const BranchDecision& d, const Instance& inst) {
  const std::vector<int>& floor = guaranteed_vector(d.rule.index);
  if (d.sets.size() != floor.size())
    throw InternalRuleOrderViolation("rule " + d.rule.name() +
                                     ": wrong branch arity");
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    const auto& set = d.sets[i];
    if (set.empty() || static_cast<int>(set.size()) < floor[i])
      throw InternalRuleOrderViolation("rule " + d.rule.name() +
                                       ": branch set below guaranteed size");
    for (VertexId v : set) {
      if (!inst.g.is_alive(v))
        throw InternalRuleOrderViolation("rule " + d.rule.name() +
                                         ": dead vertex in branch set");
      if (v == inst.s || v == inst.t)
        throw InternalRuleOrderViolation("rule " + d.rule.name() +
                                         ": branch set touches s or t");
    }
    if (!std::is_sorted(set.begin(), set.end()) ||
        std::adjacent_find(set.begin(), set.end()) != set.end())
      throw InternalRuleOrderViolation("rule " + d.rule.name() +
                                       ": branch set not a sorted set");
  }
}

}  // namespace

std::optional<BranchDecision> select_branch(const Instance& inst) {
  const Digraph rev = inst.g.reversed();
  for (int code = 0; code < kBranchRuleCount; ++code) {
    const RuleId id = RuleId::from_code(code);
    std::optional<BranchDecision> d = run_rule(id, inst, rev);
    if (!d) {
      const Digraph& oriented = id.primed ? rev : inst.g;
      const VertexId os = id.primed ? inst.t : inst.s;
      const VertexId ot = id.primed ? inst.s : inst.t;
      if (raw_guard(id.index, oriented, os, ot))
        throw InternalRuleOrderViolation(
            "rule " + id.name() +
            ": guard holds but witness derivation failed");
      continue;
    }
    validate_decision(*d, inst);
    return d;
  }
  return std::nullopt;
}

std::vector<RuleId> applicable_rules(const Instance& inst) {
  const Digraph rev = inst.g.reversed();
  std::vector<RuleId> out;
  for (int code = 0; code < kBranchRuleCount; ++code) {
    const RuleId id = RuleId::from_code(code);
    if (run_rule(id, inst, rev)) out.push_back(id);
  }
  return out;
}

}  // namespace pumpkin
