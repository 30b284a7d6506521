#include "pumpkin/reduction.hpp"

#include <algorithm>

#include "pumpkin/recognizer.hpp"

namespace pumpkin {

const char* to_string(ReductionRule r) {
  static const char* names[] = {"R1", "R2", "R3", "R4", "R5",
                                "R6", "R7", "R8", "R9"};
  return names[static_cast<int>(r)];
}

namespace {

std::vector<char> reach_mask_from(const Digraph& g, VertexId v) {
  std::vector<char> mask(g.capacity(), 0);
  std::vector<VertexId> stack{v};
  mask[v] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.out_neighbors(u))
      if (!mask[w]) {
        mask[w] = 1;
        stack.push_back(w);
      }
  }
  return mask;
}

// Mask of vertices that can reach v.
std::vector<char> coreach_mask_to(const Digraph& g, VertexId v) {
  std::vector<char> mask(g.capacity(), 0);
  std::vector<VertexId> stack{v};
  mask[v] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.in_neighbors(u))
      if (!mask[w]) {
        mask[w] = 1;
        stack.push_back(w);
      }
  }
  return mask;
}

RuleAction answer(ReductionRule rule, bool yes) {
  return {rule,
          yes ? RuleAction::Kind::AnswerYes : RuleAction::Kind::AnswerNo};
}

RuleAction delete_vertex(ReductionRule rule, VertexId v) {
  return {rule, RuleAction::Kind::DeleteVertex, v};
}

}  // namespace

std::optional<RuleAction> reduction_step(const Instance& inst) {
  const Digraph& g = inst.g;
  const VertexId s = inst.s;
  const VertexId t = inst.t;

  if (inst.k < 0) return answer(ReductionRule::R1, false);

  const bool pumpkin_now = is_pumpkin(g, s, t);
  if (inst.k == 0 && !pumpkin_now) return answer(ReductionRule::R2, false);
  if (pumpkin_now) return answer(ReductionRule::R3, true);

  // R4: s and t are exempt; an unreachable t is R8's case.
  const std::vector<char> from_s = reach_mask_from(g, s);
  for (VertexId v = 0; v < g.capacity(); ++v)
    if (g.is_alive(v) && v != t && !from_s[v])
      return delete_vertex(ReductionRule::R4, v);

  // R5: likewise, an s that cannot reach t is R8's case.
  const std::vector<char> to_t = coreach_mask_to(g, t);
  for (VertexId v = 0; v < g.capacity(); ++v)
    if (g.is_alive(v) && v != s && v != t && !to_t[v])
      return delete_vertex(ReductionRule::R5, v);

  // R6: every in-neighbor of s is forced; except that t itself cannot be
  // deleted, and the arc (t,s) survives any legal deletion, so: no.
  if (g.in_degree(s) > 0) {
    if (g.has_edge(t, s)) return answer(ReductionRule::R6, false);
    return delete_vertex(ReductionRule::R6, g.in_neighbors(s).front());
  }

  // R7: every out-neighbor of t is forced.  s cannot appear here: the arc
  // (t,s) would have kept R6 applicable.
  if (g.out_degree(t) > 0)
    return delete_vertex(ReductionRule::R7, g.out_neighbors(t).front());

  if (!from_s[t]) return answer(ReductionRule::R8, false);

  // R9: a surviving pumpkin containing the arc (s,t) is exactly {s,t}, so
  // with bystanders present the whole remainder is the only candidate.
  if (g.has_edge(s, t) && g.alive_count() > 2) {
    std::vector<VertexId> rest;
    for (VertexId v : g.vertices())
      if (v != s && v != t) rest.push_back(v);
    if (static_cast<int>(rest.size()) <= inst.k) {
      RuleAction act = answer(ReductionRule::R9, true);
      act.forced = std::move(rest);
      return act;
    }
    return answer(ReductionRule::R9, false);
  }

  return std::nullopt;
}

ReductionOutcome reduce_exhaustively(Instance inst, ReductionCounts* counts) {
  std::vector<VertexId> forced;
  for (;;) {
    std::optional<RuleAction> act = reduction_step(inst);
    if (!act) {
      std::sort(forced.begin(), forced.end());
      return {ReductionOutcome::Tag::Reduced, std::move(inst),
              std::move(forced), std::nullopt};
    }
    if (counts) ++(*counts)[static_cast<int>(act->rule)];
    switch (act->kind) {
      case RuleAction::Kind::AnswerYes:
        forced.insert(forced.end(), act->forced.begin(), act->forced.end());
        std::sort(forced.begin(), forced.end());
        return {ReductionOutcome::Tag::DecidedYes, std::nullopt,
                std::move(forced), act->rule};
      case RuleAction::Kind::AnswerNo:
        std::sort(forced.begin(), forced.end());
        return {ReductionOutcome::Tag::DecidedNo, std::nullopt,
                std::move(forced), act->rule};
      case RuleAction::Kind::DeleteVertex:
        inst.g.remove_vertex(act->victim);
        --inst.k;
        forced.push_back(act->victim);
        break;
    }
  }
}

}  // namespace pumpkin
