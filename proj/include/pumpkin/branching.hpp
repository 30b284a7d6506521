#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pumpkin/instance.hpp"

namespace pumpkin {

/// Identifier of a branching rule.  Rules are ordered (1), (2), (2'), (3),
/// (3'), ..., (8), (8'); a primed rule is the unprimed rule with the roles
/// of in- and out-neighbors reversed, equivalently the unprimed rule run on
/// the reversed graph with s and t swapped.  Rule (1) is self-symmetric and
/// has no primed form.
struct RuleId {
  int index = 1;        // 1..8
  bool primed = false;  // never true for index 1

  /// Position in the canonical order, 0..14.
  int code() const { return index == 1 ? 0 : 2 * index - 3 + (primed ? 1 : 0); }
  std::string name() const {
    return std::to_string(index) + (primed ? "'" : "");
  }
  static RuleId from_code(int code);

  bool operator==(const RuleId&) const = default;
};

inline constexpr int kBranchRuleCount = 15;

/// A fired rule with its branch sets.  The solver recurses on the children
/// (G - S_i, k - |S_i|, s, t) in the given order.  Every set is nonempty,
/// sorted, deduplicated, alive, and disjoint from {s, t}.
struct BranchDecision {
  RuleId rule;
  VertexId pivot = -1;  // the vertex the rule fired on
  std::vector<std::vector<VertexId>> sets;
};

/// Minimum deletions per branch guaranteed by the rule's safety argument.
/// Observed branch-set sizes dominate these pointwise; all vectors have
/// branching number at most 2.
const std::vector<int>& guaranteed_vector(int rule_index);

/// The decision of the first applicable branching rule, or nullopt if none
/// applies.  Caller guarantees that no reduction rule applies and k >= 1.
/// Throws InternalRuleOrderViolation if a rule whose guard holds cannot
/// derive its witnesses, or if a derived branch set breaks the invariants
/// above; both are impossible when the earlier rules were truly
/// inapplicable, so they signal a bug rather than an input condition.
std::optional<BranchDecision> select_branch(const Instance& inst);

/// Every rule whose guard (including witness derivation) holds, in canonical
/// order.  The head equals select_branch's rule.  Diagnostics and testing.
std::vector<RuleId> applicable_rules(const Instance& inst);

}  // namespace pumpkin
