#include "pumpkin/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "pumpkin/recognizer.hpp"

namespace pumpkin {

namespace {

struct SearchContext {
  SearchStats stats;
  const SolveOptions* opts = nullptr;
  int depth_limit = 0;
};

std::optional<Solution> recurse(Instance inst, int depth, SearchContext& ctx) {
  ++ctx.stats.nodes;
  ctx.stats.max_depth = std::max(ctx.stats.max_depth, depth);
  if (depth > ctx.depth_limit)
    throw std::logic_error("recursion deeper than budget allows");

  ReductionOutcome outcome =
      reduce_exhaustively(std::move(inst), &ctx.stats.reductions);
  if (outcome.tag == ReductionOutcome::Tag::DecidedYes) {
    ++ctx.stats.leaves;
    return std::move(outcome.forced);
  }
  if (outcome.tag == ReductionOutcome::Tag::DecidedNo) {
    ++ctx.stats.leaves;
    return std::nullopt;
  }

  const Instance& reduced = *outcome.instance;
  std::optional<BranchDecision> decision = select_branch(reduced);
  if (!decision)
    throw std::logic_error(
        "undecided instance with no applicable rule: the rule set is "
        "incomplete");
  ++ctx.stats.rule_firings[decision->rule.code()];
  if (ctx.opts && ctx.opts->on_branch) ctx.opts->on_branch(*decision);

  for (const auto& set : decision->sets) {
    Instance child(reduced.g.delete_vertices(set),
                   reduced.k - static_cast<int>(set.size()), reduced.s,
                   reduced.t);
    if (std::optional<Solution> sub = recurse(std::move(child), depth + 1, ctx)) {
      Solution sol = std::move(outcome.forced);
      sol.insert(sol.end(), set.begin(), set.end());
      sol.insert(sol.end(), sub->begin(), sub->end());
      std::sort(sol.begin(), sol.end());
      return sol;
    }
  }
  return std::nullopt;
}

void verify_certificate(const Instance& inst, const Solution& sol) {
  if (static_cast<int>(sol.size()) > inst.k)
    throw std::logic_error("certificate exceeds the budget");
  if (std::adjacent_find(sol.begin(), sol.end()) != sol.end())
    throw std::logic_error("certificate repeats a vertex");
  for (VertexId v : sol)
    if (v == inst.s || v == inst.t)
      throw std::logic_error("certificate deletes s or t");
  if (!is_pumpkin(inst.g.delete_vertices(sol), inst.s, inst.t))
    throw std::logic_error("certificate does not leave a pumpkin");
}

}  // namespace

RpvdsResult solve_rpvds(const Instance& inst, const SolveOptions& opts) {
  Instance start = inst;
  start.k = std::min(start.k, start.g.alive_count() - 2);

  SearchContext ctx;
  ctx.opts = &opts;
  ctx.depth_limit = std::max(start.k, 0) + 1;

  std::optional<Solution> sol = recurse(std::move(start), 1, ctx);
  if (sol) verify_certificate(inst, *sol);
  return {std::move(sol), ctx.stats};
}

RpvdsResult solve_rpvds(const Instance& inst) {
  return solve_rpvds(inst, SolveOptions{});
}

PvdsResult solve_pvds(const Digraph& g, int k, const SolveOptions& opts) {
  PvdsResult result;
  const std::vector<VertexId> live = g.vertices();
  for (VertexId s : live) {
    for (VertexId t : live) {
      if (s == t) continue;
      RpvdsResult sub = solve_rpvds(Instance(g, k, s, t), opts);
      result.stats.nodes += sub.stats.nodes;
      result.stats.leaves += sub.stats.leaves;
      result.stats.max_depth = std::max(result.stats.max_depth, sub.stats.max_depth);
      for (int i = 0; i < kBranchRuleCount; ++i)
        result.stats.rule_firings[i] += sub.stats.rule_firings[i];
      for (int i = 0; i < kReductionRuleCount; ++i)
        result.stats.reductions[i] += sub.stats.reductions[i];
      if (sub.solution) {
        result.source = s;
        result.sink = t;
        result.solution = std::move(sub.solution);
        return result;
      }
    }
  }
  return result;
}

PvdsResult solve_pvds(const Digraph& g, int k) {
  return solve_pvds(g, k, SolveOptions{});
}

}  // namespace pumpkin
