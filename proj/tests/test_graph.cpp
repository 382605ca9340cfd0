#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clawham/enumerate.hpp"
#include "clawham/generators.hpp"
#include "clawham/graph.hpp"
#include "oracles.hpp"

using namespace clawham;

TEST_CASE("neighbors") {
  CHECK(oracle::cycle(6).neighbors(0) == std::vector<Vertex>{1, 5});
  CHECK(oracle::complete(4).neighbors(2) == std::vector<Vertex>{0, 1, 3});
  CHECK(SimpleGraph(3).neighbors(1).empty());
  CHECK_THROWS_AS(oracle::cycle(6).neighbors(6), Error);
  try {
    oracle::cycle(6).neighbors(-1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidInput);
  }
}

TEST_CASE("induced subgraph") {
  const Vertex tri[] = {0, 1, 2};
  const auto k3 = induced_subgraph(oracle::complete(4), tri);
  CHECK(k3.graph == oracle::complete(3));
  const Vertex alt[] = {0, 2, 4};
  CHECK(induced_subgraph(oracle::cycle(6), alt).graph.edge_count() == 0);
  const SimpleGraph p = named_small("petersen");
  std::vector<Vertex> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  CHECK(induced_subgraph(p, all).graph == p);

  SUBCASE("composition") {
    const Vertex u[] = {1, 3, 4, 6, 8, 9};
    const auto gu = induced_subgraph(p, u);
    // W = {3, 6, 9} inside U is positions 1, 3, 5.
    const Vertex w_rel[] = {1, 3, 5};
    const Vertex w[] = {3, 6, 9};
    CHECK(induced_subgraph(gu.graph, w_rel).graph == induced_subgraph(p, w).graph);
    CHECK(gu.original == std::vector<Vertex>{1, 3, 4, 6, 8, 9});
  }
  const Vertex bad[] = {0, 7};
  CHECK_THROWS_AS(induced_subgraph(oracle::cycle(5), bad), Error);
}

TEST_CASE("edge neighbourhood and edge degree") {
  const Multigraph p4 = Multigraph::from_simple(oracle::path(4));
  // Edge ids follow edges(): 01, 12, 23.
  CHECK(edge_neighborhood(p4, 1) == std::vector<EdgeId>{0, 2});
  CHECK(edge_degree(p4, 1) == 2);
  const Multigraph star = oracle::multi(4, {{0, 1}, {0, 2}, {0, 3}});
  for (EdgeId e = 0; e < 3; ++e) CHECK(edge_degree(star, e) == 2);
  CHECK(edge_degree(oracle::multi(2, {{0, 1}}), 0) == 0);
  CHECK_THROWS_AS(edge_degree(star, 7), Error);

  SUBCASE("degree formula") {
    // A parallel twin shares both endpoints but is one neighbour.
    const Multigraph h = oracle::multi(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
    for (const Edge& e : h.edges())
      CHECK(edge_degree(h, e.id) ==
            h.degree(e.u) + h.degree(e.v) - 2 - (h.multiplicity(e.u, e.v) - 1));
    const Multigraph p = Multigraph::from_simple(named_small("petersen"));
    for (const Edge& e : p.edges()) CHECK(edge_degree(p, e.id) == 4);
  }
}

TEST_CASE("pendant edges hang off the vertex") {
  const Multigraph star = oracle::multi(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(pendant_edges(star, 0).size() == 3);
  CHECK(pendant_edges(star, 1).empty());
  CHECK(pendant_edges(Multigraph::from_simple(oracle::cycle(5)), 2).empty());
  CHECK(degree_one_vertices(star) == std::vector<Vertex>{1, 2, 3});
  // A lone edge is pendant at both ends.
  const Multigraph k2 = oracle::multi(2, {{0, 1}});
  CHECK(pendant_edges(k2, 0).size() == 1);
  CHECK(pendant_edges(k2, 1).size() == 1);
}

TEST_CASE("contraction") {
  const Multigraph k4 = Multigraph::from_simple(oracle::complete(4));
  const Vertex tri[] = {0, 1, 2};
  const Contraction c = contract(k4, tri);
  CHECK(c.graph.vertex_count() == 2);
  CHECK(c.graph.edge_count() == 3);
  CHECK(c.graph.multiplicity(0, c.merged) == 3);

  const Vertex one[] = {3};
  const Contraction same = contract(k4, one);
  CHECK(same.graph.edge_count() == 6);

  const Multigraph c5 = Multigraph::from_simple(oracle::cycle(5));
  const Vertex pair[] = {0, 1};
  const Contraction c4 = contract(c5, pair);
  CHECK(c4.graph.vertex_count() == 4);
  CHECK(c4.graph.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.graph.degree(v) == 2);
  // Surviving edges keep their ids.
  for (const Edge& e : c4.graph.edges()) CHECK(c5.has_edge_id(e.id));

  CHECK_THROWS_AS(contract(c5, std::span<const Vertex>{}), Error);

  SUBCASE("edge count drops by the edges inside F") {
    const Multigraph p = Multigraph::from_simple(named_small("petersen"));
    const Vertex f[] = {0, 1, 2, 5, 7};
    int inside = 0;
    for (const Edge& e : p.edges())
      if (std::find(std::begin(f), std::end(f), e.u) != std::end(f) &&
          std::find(std::begin(f), std::end(f), e.v) != std::end(f))
        ++inside;
    CHECK(contract(p, f).graph.edge_count() == p.edge_count() - inside);
  }
}

TEST_CASE("structural predicates") {
  CHECK(is_triangle_free(oracle::cycle(5)));
  CHECK(is_2_connected(oracle::cycle(5)));
  CHECK_FALSE(is_triangle_free(oracle::complete(3)));
  CHECK_FALSE(is_2_connected(oracle::path(4)));
  CHECK_FALSE(is_2_connected(oracle::complete(2)));
  CHECK(is_connected(oracle::path(4)));
  CHECK_FALSE(is_connected(SimpleGraph(2)));
}

TEST_CASE("essential edge connectivity") {
  const Multigraph p4 = Multigraph::from_simple(oracle::path(4));
  CHECK_FALSE(is_essentially_k_edge_connected(p4, 2));
  CHECK(is_essentially_k_edge_connected(oracle::multi(4, {{0, 1}, {0, 2}, {0, 3}}), 2));
  CHECK(is_essentially_k_edge_connected(Multigraph::from_simple(oracle::cycle(5)), 2));
  CHECK_THROWS_AS(is_essentially_k_edge_connected(Multigraph(2), 2), Error);

  SUBCASE("agrees with deletion brute force on small multigraphs") {
    for (const Multigraph& h : enumerate_multigraphs_by_edges(6))
      for (int k = 1; k <= 3; ++k)
        CHECK(is_essentially_k_edge_connected(h, k) == oracle::essentially_k_edge_connected(h, k));
  }
}

TEST_CASE("multigraph edge identities are stable") {
  Multigraph h(3);
  const EdgeId a = h.add_edge(0, 1);
  const EdgeId b = h.add_edge(0, 1);
  CHECK(a != b);
  CHECK(h.multiplicity(0, 1) == 2);
  CHECK(h.edge(b).v == 1);
  CHECK_THROWS_AS(h.add_edge(2, 2), Error);
}
