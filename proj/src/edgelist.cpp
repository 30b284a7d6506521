#include "pumpkin/edgelist.hpp"

#include <fstream>
#include <sstream>

namespace pumpkin {

namespace {

bool parse_metadata(const std::string& line, EdgeListFile& file) {
  std::istringstream in(line);
  std::string hash, key;
  in >> hash >> key;
  long long value;
  if (!(in >> value)) return false;
  if (key == "source")
    file.source = static_cast<VertexId>(value);
  else if (key == "sink")
    file.sink = static_cast<VertexId>(value);
  else if (key == "planted_k")
    file.planted_k = static_cast<int>(value);
  return true;
}

}  // namespace

EdgeListFile read_edge_list(std::istream& in) {
  EdgeListFile file;
  std::string line;
  bool have_header = false;
  long long expected_arcs = 0;
  int line_no = 0;

  auto bad = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      parse_metadata(line, file);
      continue;
    }
    std::istringstream fields(line);
    if (!have_header) {
      long long n, m;
      std::string extra;
      if (!(fields >> n >> m) || (fields >> extra))
        bad("expected header \"n m\"");
      if (n < 0 || m < 0) bad("negative header value");
      file.n = static_cast<VertexId>(n);
      expected_arcs = m;
      have_header = true;
      continue;
    }
    long long u, v;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) bad("expected arc \"u v\"");
    if (u < 0 || u >= file.n || v < 0 || v >= file.n)
      bad("arc endpoint out of range");
    if (static_cast<long long>(file.edges.size()) == expected_arcs)
      bad("more arcs than the header announced");
    file.edges.emplace_back(static_cast<VertexId>(u),
                            static_cast<VertexId>(v));
  }
  if (!have_header) throw ParseError("missing header line \"n m\"");
  if (static_cast<long long>(file.edges.size()) != expected_arcs)
    throw ParseError("header announced " + std::to_string(expected_arcs) +
                     " arcs, found " + std::to_string(file.edges.size()));

  // Surface structural problems (self-loops, duplicates) as parse errors.
  try {
    Digraph::from_edges(file.n, file.edges);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
  return file;
}

EdgeListFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

Digraph to_digraph(const EdgeListFile& file) {
  return Digraph::from_edges(file.n, file.edges);
}

void write_edge_list(std::ostream& out, const Digraph& g,
                     const EdgeListMeta& meta) {
  out << g.capacity() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  if (meta.source) out << "# source " << *meta.source << '\n';
  if (meta.sink) out << "# sink " << *meta.sink << '\n';
  if (meta.planted_k) out << "# planted_k " << *meta.planted_k << '\n';
}

void write_edge_list_file(const std::string& path, const Digraph& g,
                          const EdgeListMeta& meta) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_edge_list(out, g, meta);
  if (!out) throw ParseError("failed writing " + path);
}

}  // namespace pumpkin
