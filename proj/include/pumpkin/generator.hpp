#pragma once

#include <cstdint>
#include <vector>

#include "pumpkin/instance.hpp"

namespace pumpkin {

/// Recipe for a planted instance: a pumpkin with the given path lengths,
/// plus `noise_vertices` fresh vertices wired randomly into it.  Deleting
/// the noise restores the pumpkin, so the optimum is at most
/// noise_vertices; the instance budget k is set to exactly that.
/// The seed fully determines the output (see Rng for the stream contract).
struct PlantSpec {
  std::vector<int> path_lengths;      // arcs per path, each >= 1
  int noise_vertices = 0;
  double noise_edges_per_vertex = 2.0;  // expected out- and in-attachments
  std::uint64_t seed = 0;
};

struct PumpkinGraph {
  Digraph g;
  VertexId source;
  VertexId sink;
};

/// A pumpkin with the given path lengths: source 0, sink n-1, internal
/// vertices numbered path by path.  A length-1 entry (the direct arc) is
/// only legal on its own; mixing it with longer paths is rejected with
/// MixedDirectEdgeError.
PumpkinGraph make_pumpkin(const std::vector<int>& path_lengths);

/// Adds spec.noise_vertices fresh vertices with random incident arcs.
/// Noise never creates self-loops, duplicate arcs, in-arcs to s, or
/// out-arcs from t, and never touches arcs between original vertices.
Instance plant_noise(const Digraph& g, VertexId s, VertexId t,
                     const PlantSpec& spec);

/// make_pumpkin + plant_noise in one step.
Instance make_planted(const PlantSpec& spec);

/// Each ordered pair (u, v), u != v, gets an arc independently with
/// probability p.
Digraph random_digraph(VertexId n, double p, std::uint64_t seed);

}  // namespace pumpkin
