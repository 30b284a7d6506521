#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pumpkin/digraph.hpp"

namespace pumpkin {

/// The text edge-list format:
///   - one header line "n m",
///   - m arc lines "u v" (a directed arc u -> v), 0 <= u, v < n,
///   - lines starting with '#' are ignored; blank lines are skipped.
/// Self-loops and duplicate arcs are parse errors, as is an arc count that
/// does not match m.  Planted instances carry their metadata in trailing
/// comments "# source S", "# sink T", "# planted_k R", which the parser
/// picks up from any comment line.
struct EdgeListFile {
  VertexId n = 0;
  std::vector<Arc> edges;
  std::optional<VertexId> source;
  std::optional<VertexId> sink;
  std::optional<int> planted_k;
};

EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list_file(const std::string& path);

Digraph to_digraph(const EdgeListFile& file);

struct EdgeListMeta {
  std::optional<VertexId> source;
  std::optional<VertexId> sink;
  std::optional<int> planted_k;
};

/// Arcs ascending by (u, v); metadata comments appended after the arcs.
void write_edge_list(std::ostream& out, const Digraph& g,
                     const EdgeListMeta& meta = {});
void write_edge_list_file(const std::string& path, const Digraph& g,
                          const EdgeListMeta& meta = {});

}  // namespace pumpkin
