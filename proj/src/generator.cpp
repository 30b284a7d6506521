#include "pumpkin/generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "pumpkin/recognizer.hpp"
#include "pumpkin/rng.hpp"

namespace pumpkin {

PumpkinGraph make_pumpkin(const std::vector<int>& path_lengths) {
  if (path_lengths.empty())
    throw std::invalid_argument("at least one path is required");
  for (int len : path_lengths)
    if (len < 1) throw std::invalid_argument("path lengths must be >= 1");
  if (std::any_of(path_lengths.begin(), path_lengths.end(),
                  [](int len) { return len == 1; }) &&
      path_lengths.size() > 1)
    throw MixedDirectEdgeError();

  int internals = 0;
  for (int len : path_lengths) internals += len - 1;
  const VertexId n = static_cast<VertexId>(internals + 2);
  const VertexId s = 0;
  const VertexId t = n - 1;

  Digraph g(n);
  VertexId next = 1;
  for (int len : path_lengths) {
    VertexId prev = s;
    for (int step = 1; step < len; ++step) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, t);
  }
  return {std::move(g), s, t};
}

Instance plant_noise(const Digraph& g, VertexId s, VertexId t,
                     const PlantSpec& spec) {
  if (!is_pumpkin(g, s, t))
    throw std::invalid_argument("plant_noise needs a pumpkin to start from");
  if (spec.noise_vertices < 0)
    throw std::invalid_argument("noise_vertices must be >= 0");

  const VertexId base = g.capacity();
  const VertexId total = base + spec.noise_vertices;
  Digraph noisy(total);
  for (const auto& [u, v] : g.arcs()) noisy.add_edge(u, v);

  if (spec.noise_vertices > 0) {
    Rng rng(spec.seed);
    const double p =
        std::min(1.0, spec.noise_edges_per_vertex / (total - 2));
    for (VertexId u = base; u < total; ++u) {
      for (VertexId w = 0; w < total; ++w) {
        if (w == u || w == s) continue;  // no in-arcs to s
        if (rng.bernoulli(p) && !noisy.has_edge(u, w)) noisy.add_edge(u, w);
      }
      for (VertexId w = 0; w < total; ++w) {
        if (w == u || w == t) continue;  // no out-arcs from t
        if (rng.bernoulli(p) && !noisy.has_edge(w, u)) noisy.add_edge(w, u);
      }
    }
  }
  return Instance(std::move(noisy), spec.noise_vertices, s, t);
}

Instance make_planted(const PlantSpec& spec) {
  PumpkinGraph base = make_pumpkin(spec.path_lengths);
  return plant_noise(base.g, base.source, base.sink, spec);
}

Digraph random_digraph(VertexId n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("edge probability must be in [0, 1]");
  Rng rng(seed);
  Digraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v && rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

}  // namespace pumpkin
