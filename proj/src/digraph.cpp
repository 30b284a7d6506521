#include "pumpkin/digraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace pumpkin {

Digraph::Digraph(VertexId n)
    : out_(n), in_(n), alive_(n, 1), alive_count_(n) {
  if (n < 0) throw OutOfRangeError(n, 0);
}

Digraph Digraph::from_edges(VertexId n, const std::vector<Arc>& edges) {
  Digraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Digraph::require_alive(VertexId v) const {
  if (!is_alive(v)) throw DeadVertexError(v);
}

std::vector<VertexId> Digraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(alive_count_);
  for (VertexId v = 0; v < capacity(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < capacity(); ++u)
    if (alive_[u])
      for (VertexId v : out_[u]) out.emplace_back(u, v);
  return out;
}

const std::vector<VertexId>& Digraph::out_neighbors(VertexId v) const {
  require_alive(v);
  return out_[v];
}

const std::vector<VertexId>& Digraph::in_neighbors(VertexId v) const {
  require_alive(v);
  return in_[v];
}

bool Digraph::has_edge(VertexId u, VertexId v) const {
  if (!is_alive(u) || !is_alive(v)) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

namespace {

void insert_sorted(std::vector<VertexId>& list, VertexId v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void erase_sorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) list.erase(it);
}

}  // namespace

void Digraph::add_edge(VertexId u, VertexId v) {
  if (u < 0 || u >= capacity()) throw OutOfRangeError(u, capacity());
  if (v < 0 || v >= capacity()) throw OutOfRangeError(v, capacity());
  if (u == v) throw SelfLoopError(u);
  require_alive(u);
  require_alive(v);
  if (has_edge(u, v)) throw DuplicateEdgeError(u, v);
  insert_sorted(out_[u], v);
  insert_sorted(in_[v], u);
  ++edge_count_;
}

void Digraph::remove_vertex(VertexId v) {
  require_alive(v);
  for (VertexId w : out_[v]) erase_sorted(in_[w], v);
  for (VertexId w : in_[v]) erase_sorted(out_[w], v);
  edge_count_ -= static_cast<long long>(out_[v].size() + in_[v].size());
  out_[v].clear();
  in_[v].clear();
  alive_[v] = 0;
  --alive_count_;
}

Digraph Digraph::delete_vertices(const std::vector<VertexId>& drop) const {
  Digraph g = *this;
  for (VertexId v : drop) g.remove_vertex(v);
  return g;
}

Digraph Digraph::reversed() const {
  Digraph g = *this;
  std::swap(g.out_, g.in_);
  return g;
}

std::vector<VertexId> Digraph::reachable_from(VertexId v) const {
  require_alive(v);
  std::vector<char> seen(capacity(), 0);
  std::vector<VertexId> stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : out_[u])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::vector<VertexId> out;
  for (VertexId u = 0; u < capacity(); ++u)
    if (seen[u]) out.push_back(u);
  return out;
}

std::vector<int> Digraph::bfs_distances(VertexId v) const {
  require_alive(v);
  std::vector<int> dist(capacity(), -1);
  std::queue<VertexId> queue;
  dist[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (VertexId w : out_[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
  }
  return dist;
}

void Digraph::check_consistency() const {
  auto fail = [](const std::string& what) { throw std::logic_error(what); };
  long long arcs_seen = 0;
  int live = 0;
  for (VertexId v = 0; v < capacity(); ++v) {
    if (!alive_[v]) {
      if (!out_[v].empty() || !in_[v].empty())
        fail("dead vertex with adjacency");
      continue;
    }
    ++live;
    if (!std::is_sorted(out_[v].begin(), out_[v].end()) ||
        !std::is_sorted(in_[v].begin(), in_[v].end()))
      fail("adjacency not sorted");
    if (std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end() ||
        std::adjacent_find(in_[v].begin(), in_[v].end()) != in_[v].end())
      fail("duplicate adjacency entry");
    for (VertexId w : out_[v]) {
      if (w == v) fail("self-loop");
      if (!is_alive(w)) fail("arc to dead vertex");
      if (!std::binary_search(in_[w].begin(), in_[w].end(), v))
        fail("mirror violation: missing in-entry");
    }
    for (VertexId w : in_[v]) {
      if (!is_alive(w)) fail("arc from dead vertex");
      if (!std::binary_search(out_[w].begin(), out_[w].end(), v))
        fail("mirror violation: missing out-entry");
    }
    arcs_seen += static_cast<long long>(out_[v].size());
  }
  if (live != alive_count_) fail("alive_count out of sync");
  if (arcs_seen != edge_count_) fail("edge_count out of sync");
}

}  // namespace pumpkin
