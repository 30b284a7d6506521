#pragma once

#include <optional>
#include <vector>

#include "pumpkin/instance.hpp"
#include "pumpkin/recognizer.hpp"

namespace pumpkin {

/// Ground truth for differential testing.  Solved by the problem definition
/// alone (subset enumeration + recognizer), never by the branching rules.
struct OracleResult {
  bool answer = false;
  std::optional<int> min_size;       // size of a minimum solution when yes
  std::optional<Solution> witness;   // first one in canonical subset order
};

inline constexpr int kOracleRpvdsMaxVertices = 16;
inline constexpr int kOraclePvdsMaxVertices = 12;

/// Enumerates subsets of V \ {s,t} by size 0..min(k, |V|-2), each size in
/// colexicographic order, and returns the first subset whose deletion leaves
/// a pumpkin with source s and sink t.  Throws TooLargeError above the
/// recommended vertex bound.
OracleResult brute_force_rpvds(const Instance& inst);

/// Minimum over all ordered (s, t) pairs of brute_force_rpvds; yes iff some
/// pair succeeds within k.
OracleResult brute_force_pvds(const Digraph& g, int k);

}  // namespace pumpkin
