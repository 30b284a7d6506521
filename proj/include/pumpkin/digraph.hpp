#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pumpkin/errors.hpp"

namespace pumpkin {

using VertexId = std::int32_t;
using Arc = std::pair<VertexId, VertexId>;

/// Simple directed graph over dense vertex ids [0, capacity).
///
/// Ids are stable: deleting a vertex marks its slot dead and strips incident
/// arcs, it never renumbers the survivors.  Adjacency lists are kept sorted
/// ascending, which makes every scan in the solver deterministic.
/// Self-loops and duplicate arcs are rejected; the antiparallel pair
/// {(u,v),(v,u)} is two distinct arcs and is allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(VertexId n);  // n isolated live vertices

  static Digraph from_edges(VertexId n, const std::vector<Arc>& edges);

  VertexId capacity() const { return static_cast<VertexId>(out_.size()); }
  int alive_count() const { return alive_count_; }
  long long edge_count() const { return edge_count_; }
  bool is_alive(VertexId v) const {
    return v >= 0 && v < capacity() && alive_[v];
  }

  /// Live vertex ids, ascending.
  std::vector<VertexId> vertices() const;
  /// All arcs (u, v), ascending by (u, v).
  std::vector<Arc> arcs() const;

  const std::vector<VertexId>& out_neighbors(VertexId v) const;
  const std::vector<VertexId>& in_neighbors(VertexId v) const;
  int out_degree(VertexId v) const {
    return static_cast<int>(out_neighbors(v).size());
  }
  int in_degree(VertexId v) const {
    return static_cast<int>(in_neighbors(v).size());
  }
  bool has_edge(VertexId u, VertexId v) const;

  void add_edge(VertexId u, VertexId v);

  /// In-place deletion; delete_vertices is the value-returning wrapper.
  void remove_vertex(VertexId v);

  /// G - S: a fresh graph with the vertices of `drop` dead and their
  /// incident arcs removed.  This graph is left untouched.
  Digraph delete_vertices(const std::vector<VertexId>& drop) const;

  /// Every arc (u, v) replaced by (v, u); the alive set is preserved.
  Digraph reversed() const;

  /// Live vertices reachable from v by directed paths, v included, sorted.
  std::vector<VertexId> reachable_from(VertexId v) const;

  /// Shortest hop-distance from v, indexed by vertex id; -1 marks vertices
  /// that are unreachable or dead.  distance[v] == 0.
  std::vector<int> bfs_distances(VertexId v) const;

  bool operator==(const Digraph&) const = default;

  /// Full-scan structural check (mirror consistency, sortedness, liveness).
  /// Test hook; throws std::logic_error on corruption.
  void check_consistency() const;

 private:
  void require_alive(VertexId v) const;

  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<char> alive_;
  int alive_count_ = 0;
  long long edge_count_ = 0;
};

}  // namespace pumpkin
