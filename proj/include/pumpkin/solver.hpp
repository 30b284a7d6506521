#pragma once

#include <functional>
#include <optional>

#include "pumpkin/branching.hpp"
#include "pumpkin/instance.hpp"
#include "pumpkin/reduction.hpp"

namespace pumpkin {

/// Recursion-tree counters.  nodes counts every recursive call, leaves the
/// decided ones; firings are indexed by RuleId::code() and reduction counts
/// by rule (R1..R9).
struct SearchStats {
  long long nodes = 0;
  long long leaves = 0;
  int max_depth = 0;
  std::array<long long, kBranchRuleCount> rule_firings{};
  ReductionCounts reductions{};

  bool operator==(const SearchStats&) const = default;
};

struct SolveOptions {
  /// Called for every fired branching decision; used by the
  /// branching-vector audit.
  std::function<void(const BranchDecision&)> on_branch;
};

struct RpvdsResult {
  std::optional<Solution> solution;  // present iff the answer is yes
  SearchStats stats;
};

/// The branching algorithm for the restricted problem: reduce exhaustively,
/// then branch on the first applicable rule and recurse on its sets in
/// order, returning the first YES child's deletions joined with the forced
/// ones.  A returned solution satisfies |S| <= k, S disjoint from {s, t},
/// and G - S a pumpkin with source s and sink t (re-verified before
/// returning).  The budget is capped at |V| - 2 up front; larger budgets
/// are equivalent.
RpvdsResult solve_rpvds(const Instance& inst);
RpvdsResult solve_rpvds(const Instance& inst, const SolveOptions& opts);

struct PvdsResult {
  std::optional<VertexId> source;
  std::optional<VertexId> sink;
  std::optional<Solution> solution;
  SearchStats stats;  // totals over all attempted (s, t) pairs
};

/// Tries every ordered pair of distinct live vertices in ascending (s, t)
/// order and returns the first success.
PvdsResult solve_pvds(const Digraph& g, int k);
PvdsResult solve_pvds(const Digraph& g, int k, const SolveOptions& opts);

}  // namespace pumpkin
