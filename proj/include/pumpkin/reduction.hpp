#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pumpkin/instance.hpp"

namespace pumpkin {

/// Deterministic answer-preserving simplifications, applied before any
/// branching, in this order:
///   R1  k < 0                                      -> no
///   R2  k = 0 and not a pumpkin                    -> no
///   R3  pumpkin                                    -> yes
///   R4  vertex (not s,t) unreachable from s        -> delete it
///   R5  vertex (not s,t) that cannot reach t       -> delete it
///   R6  in-neighbor of s                           -> delete it, or no if
///                                                     the arc is (t,s)
///   R7  out-neighbor of t                          -> delete it
///   R8  t unreachable from s                       -> no
///   R9  arc (s,t) with more than two vertices      -> yes iff everything
///                                                     else fits the budget
/// R4-R7 pick the smallest qualifying id.  R9 closes a gap: no other rule
/// handles the direct arc with bystanders, yet any surviving pumpkin that
/// keeps the arc (s,t) is exactly {s,t}, so the whole remainder is forced.
enum class ReductionRule { R1, R2, R3, R4, R5, R6, R7, R8, R9 };

inline constexpr int kReductionRuleCount = 9;

const char* to_string(ReductionRule r);

struct RuleAction {
  enum class Kind { AnswerYes, AnswerNo, DeleteVertex };

  ReductionRule rule;
  Kind kind;
  VertexId victim = -1;           // DeleteVertex
  std::vector<VertexId> forced;   // R9 AnswerYes: every vertex but s and t
};

/// First applicable rule, or nullopt at fixpoint.
std::optional<RuleAction> reduction_step(const Instance& inst);

struct ReductionOutcome {
  enum class Tag { DecidedYes, DecidedNo, Reduced };

  Tag tag;
  std::optional<Instance> instance;        // Reduced: the fixpoint instance
  std::vector<VertexId> forced;            // deletions made, ascending; on
                                           // DecidedYes includes R9's set
  std::optional<ReductionRule> decided_by; // rule that ended the loop
};

using ReductionCounts = std::array<long long, kReductionRuleCount>;

/// Applies reduction_step to fixpoint, deleting victims and decreasing k by
/// one per deletion.  Per-rule firing counts are added to *counts when given.
ReductionOutcome reduce_exhaustively(Instance inst,
                                     ReductionCounts* counts = nullptr);

}  // namespace pumpkin
