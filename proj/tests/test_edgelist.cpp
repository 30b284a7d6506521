#include <doctest.h>

#include <sstream>

#include "pumpkin/edgelist.hpp"
#include "pumpkin/generator.hpp"

using namespace pumpkin;

namespace {

EdgeListFile parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace

TEST_CASE("a written graph parses back identically") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Digraph g = random_digraph(2 + seed % 7, 0.4, seed);
    std::ostringstream out;
    write_edge_list(out, g, {0, 1, 2});
    std::istringstream in(out.str());
    EdgeListFile file = read_edge_list(in);
    CHECK(to_digraph(file) == g);
    CHECK(file.source == 0);
    CHECK(file.sink == 1);
    CHECK(file.planted_k == 2);
  }
}

TEST_CASE("comments and blank lines are ignored, metadata is picked up") {
  EdgeListFile file = parse(
      "# a corpus instance\n"
      "3 2\n"
      "\n"
      "0 1\n"
      "# source 0\n"
      "1 2\n"
      "# sink 2\n"
      "# planted_k 1\n"
      "# free-form trailing note\n");
  CHECK(file.n == 3);
  CHECK(file.edges.size() == 2);
  CHECK(file.source == 0);
  CHECK(file.sink == 2);
  CHECK(file.planted_k == 1);
}

TEST_CASE("malformed inputs are parse errors") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("2\n"), ParseError);                    // short header
  CHECK_THROWS_AS(parse("2 1 7\n0 1\n"), ParseError);           // long header
  CHECK_THROWS_AS(parse("2 2\n0 1\n"), ParseError);             // missing arc
  CHECK_THROWS_AS(parse("2 1\n0 1\n1 0\n"), ParseError);        // extra arc
  CHECK_THROWS_AS(parse("2 1\n0 2\n"), ParseError);             // out of range
  CHECK_THROWS_AS(parse("2 1\n0\n"), ParseError);               // short arc
  CHECK_THROWS_AS(parse("2 1\n0 1 3\n"), ParseError);           // long arc
  CHECK_THROWS_AS(parse("2 1\n1 1\n"), ParseError);             // self-loop
  CHECK_THROWS_AS(parse("2 2\n0 1\n0 1\n"), ParseError);        // duplicate
  CHECK_THROWS_AS(parse("2 one\n"), ParseError);                // not a number
}

TEST_CASE("windows line endings are tolerated") {
  EdgeListFile file = parse("2 1\r\n0 1\r\n");
  CHECK(file.n == 2);
  CHECK(file.edges.size() == 1);
}
