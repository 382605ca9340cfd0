#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "clawham/generators.hpp"
#include "clawham/io.hpp"
#include "oracles.hpp"

using namespace clawham;

TEST_CASE("graph6 known strings") {
  CHECK(parse_graph6("Bw") == oracle::complete(3));
  CHECK(to_graph6(oracle::complete(3)) == "Bw");
  CHECK(to_graph6(SimpleGraph(0)) == "?");
  CHECK(parse_graph6(">>graph6<<Bw") == oracle::complete(3));
  CHECK(to_graph6(oracle::complete(5)) == "D~{");
}

TEST_CASE("graph6 round trips") {
  for (int n : {1, 2, 5, 10, 62, 63, 64, 100, 300}) {
    SimpleGraph g(n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
  }
  const SimpleGraph s = sharpness_graph(4);
  CHECK(parse_graph(format_graph(s, GraphFormat::kGraph6), GraphFormat::kAuto) == s);
  CHECK(parse_graph(format_graph(s, GraphFormat::kEdgeList), GraphFormat::kAuto) == s);
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("B"), Error);    // missing adjacency bytes
  CHECK_THROWS_AS(parse_graph6("Bw!"), Error);  // trailing garbage
  CHECK_THROWS_AS(parse_graph6("B\x7f"), Error);
}

TEST_CASE("edge lists") {
  const std::string text = "# a triangle\n3 3\n0 1\n\n1 2\n0 2\n";
  CHECK(parse_edge_list(text) == oracle::complete(3));
  CHECK(to_edge_list(oracle::path(3)) == "3 2\n0 1\n1 2\n");

  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), Error);       // too few edges
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), Error);       // out of range
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), Error);       // loop
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), Error);  // repeated in a simple graph
  CHECK_THROWS_AS(parse_edge_list("x y\n"), Error);

  const Multigraph h = parse_multigraph_edge_list("2 2\n0 1\n1 0\n");
  CHECK(h.edge_count() == 2);
  CHECK(h.multiplicity(0, 1) == 2);
  CHECK(parse_multigraph_edge_list(to_edge_list(h)).edge_count() == 2);
}

TEST_CASE("corpus reading") {
  std::istringstream in("Bw\n\nBg\nCF\n");
  const auto gs = read_graph6_corpus(in);
  REQUIRE(gs.size() == 3);
  CHECK(gs[0] == oracle::complete(3));
  CHECK(gs[1].edge_count() == 2);
  std::istringstream again("Bw\nBg\nCF\n");
  CHECK(read_graph6_corpus(again, 2).size() == 2);
  std::istringstream bad("Bw\n!!\n");
  try {
    read_graph6_corpus(bad);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("format names") {
  CHECK(parse_format("graph6") == GraphFormat::kGraph6);
  CHECK(parse_format("edgelist") == GraphFormat::kEdgeList);
  CHECK(parse_format("auto") == GraphFormat::kAuto);
  CHECK_THROWS_AS(parse_format("dot"), Error);
}
