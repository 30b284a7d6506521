#include <doctest.h>

#include <algorithm>

#include "pumpkin/digraph.hpp"
#include "pumpkin/generator.hpp"

using namespace pumpkin;

TEST_CASE("from_edges builds the given arcs") {
  Digraph g = Digraph::from_edges(2, {{0, 1}});
  CHECK(g.alive_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK(g.out_neighbors(0) == std::vector<VertexId>{1});
  CHECK(g.in_neighbors(1) == std::vector<VertexId>{0});
}

TEST_CASE("antiparallel pair is two distinct arcs and is accepted") {
  Digraph g = Digraph::from_edges(3, {{0, 1}, {1, 0}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Digraph::from_edges(2, {{0, 0}}), SelfLoopError);
  CHECK_THROWS_AS(Digraph::from_edges(2, {{0, 1}, {0, 1}}),
                  DuplicateEdgeError);
  CHECK_THROWS_AS(Digraph::from_edges(2, {{0, 2}}), OutOfRangeError);
  CHECK_THROWS_AS(Digraph::from_edges(2, {{-1, 0}}), OutOfRangeError);
}

TEST_CASE("delete_vertices removes vertices and incident arcs") {
  Digraph path = Digraph::from_edges(3, {{0, 1}, {1, 2}});
  Digraph cut = path.delete_vertices({1});
  CHECK(cut.alive_count() == 2);
  CHECK(cut.edge_count() == 0);
  CHECK(cut.vertices() == std::vector<VertexId>{0, 2});
  // the original is untouched
  CHECK(path.alive_count() == 3);
  CHECK(path.has_edge(0, 1));

  CHECK(path.delete_vertices({}) == path);

  Digraph cycle = Digraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Digraph rest = cycle.delete_vertices({0, 2});
  CHECK(rest.vertices() == std::vector<VertexId>{1, 3});
  CHECK(rest.edge_count() == 0);

  CHECK_THROWS_AS(path.delete_vertices({1}).delete_vertices({1}),
                  DeadVertexError);
}

TEST_CASE("reverse swaps every arc") {
  Digraph g = Digraph::from_edges(2, {{0, 1}});
  Digraph r = g.reversed();
  CHECK(r.has_edge(1, 0));
  CHECK_FALSE(r.has_edge(0, 1));

  Digraph anti = Digraph::from_edges(2, {{0, 1}, {1, 0}});
  CHECK(anti.reversed() == anti);
}

TEST_CASE("reachability and distances") {
  Digraph path = Digraph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(path.reachable_from(0) == std::vector<VertexId>{0, 1, 2});
  CHECK(path.reachable_from(2) == std::vector<VertexId>{2});

  Digraph two = Digraph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(two.reachable_from(0) == std::vector<VertexId>{0, 1});

  CHECK(path.bfs_distances(0) == std::vector<int>{0, 1, 2});

  Digraph diamond = Digraph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(diamond.bfs_distances(0) == std::vector<int>{0, 1, 1, 2});

  Digraph back = Digraph::from_edges(2, {{1, 0}});
  CHECK(back.bfs_distances(0) == std::vector<int>{0, -1});

  CHECK_THROWS_AS(path.delete_vertices({1}).reachable_from(1),
                  DeadVertexError);
}

TEST_CASE("random graphs keep the structural invariants") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    Digraph g = random_digraph(n, 0.3, seed);
    g.check_consistency();

    // reverse is an involution and preserves counts
    Digraph rev = g.reversed();
    rev.check_consistency();
    CHECK(rev.edge_count() == g.edge_count());
    CHECK(rev.reversed() == g);

    // reachable_from on the reverse = the set of vertices that reach v
    for (VertexId v : g.vertices()) {
      std::vector<VertexId> expect;
      for (VertexId u : g.vertices()) {
        auto from_u = g.reachable_from(u);
        if (std::binary_search(from_u.begin(), from_u.end(), v))
          expect.push_back(u);
      }
      CHECK(rev.reachable_from(v) == expect);
    }

    // deletion keeps exactly the arcs with both endpoints outside S
    std::vector<VertexId> drop;
    for (VertexId v : g.vertices())
      if (v % 3 == 0) drop.push_back(v);
    Digraph rest = g.delete_vertices(drop);
    rest.check_consistency();
    CHECK(rest.alive_count() == g.alive_count() - static_cast<int>(drop.size()));
    long long kept = 0;
    for (const auto& [u, v] : g.arcs())
      if (u % 3 != 0 && v % 3 != 0) {
        CHECK(rest.has_edge(u, v));
        ++kept;
      }
    CHECK(rest.edge_count() == kept);

    // degrees match adjacency sizes
    for (VertexId v : g.vertices()) {
      CHECK(g.out_degree(v) == static_cast<int>(g.out_neighbors(v).size()));
      CHECK(g.in_degree(v) == static_cast<int>(g.in_neighbors(v).size()));
    }
  }
}
