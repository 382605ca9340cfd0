#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clawham/closure.hpp"
#include "clawham/enumerate.hpp"
#include "clawham/generators.hpp"
#include "clawham/iso.hpp"
#include "clawham/linegraph.hpp"
#include "oracles.hpp"

using namespace clawham;

namespace {

// Checks the recorded bijection directly: u ~ v in g iff their root edges meet.
bool bijection_is_isomorphism(const SimpleGraph& g, const LineGraphRoot& r) {
  const int n = g.vertex_count();
  if (static_cast<int>(r.vertex_to_edge.size()) != n || r.root.edge_count() != n) return false;
  std::set<VertexPair> seen;
  for (auto [a, b] : r.vertex_to_edge) {
    if (!r.root.has_edge(a, b) || !seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      auto [a, b] = r.vertex_to_edge[u];
      auto [c, d] = r.vertex_to_edge[v];
      const bool meet = a == c || a == d || b == c || b == d;
      if (meet != g.has_edge(u, v)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("line graph examples") {
  CHECK(line_graph(named_small("claw")).graph == oracle::complete(3));
  CHECK(are_isomorphic(line_graph(oracle::path(4)).graph, oracle::path(3)));
  CHECK(are_isomorphic(line_graph(oracle::cycle(5)).graph, oracle::cycle(5)));
  const LineGraph l = line_graph(oracle::path(4));
  CHECK(l.edge_of == std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SimpleGraph h = random_triangle_free(1 + static_cast<int>(seed % 12), seed);
    CHECK(line_graph(h).graph == oracle::line_graph(h));
  }
}

TEST_CASE("root examples") {
  const LineGraphRoot k3 = root_of_line_graph(oracle::complete(3));
  CHECK(are_isomorphic(k3.root, named_small("claw")));
  CHECK(is_triangle_free(k3.root));
  CHECK(verify_root(oracle::complete(3), k3));

  const SimpleGraph petersen = named_small("petersen");
  const SimpleGraph lp = line_graph(petersen).graph;
  const LineGraphRoot rp = root_of_line_graph(lp);
  CHECK(are_isomorphic(rp.root, petersen));
  CHECK(bijection_is_isomorphism(lp, rp));

  const LineGraphRoot c6 = root_of_line_graph(oracle::cycle(6));
  CHECK(are_isomorphic(c6.root, oracle::cycle(6)));

  // A single vertex is the line graph of one edge.
  const LineGraphRoot k1 = root_of_line_graph(SimpleGraph(1));
  CHECK(k1.root.vertex_count() == 2);
  CHECK(k1.root.edge_count() == 1);
}

TEST_CASE("root errors name the obstruction") {
  CHECK_THROWS_AS(root_of_line_graph(named_small("claw")), Error);
  // K4 - e is L(K1,3 + e) whose root has a triangle.
  SimpleGraph diamond = oracle::complete(4);
  diamond.remove_edge(0, 1);
  try {
    root_of_line_graph(diamond);
    FAIL("diamond has no triangle-free root");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidInput);
    CHECK(std::string(e.what()).size() > 0);
  }
  CHECK_THROWS_AS(root_of_line_graph(SimpleGraph(2)), Error);
}

TEST_CASE("connected triangle-free graphs come back from their line graphs") {
  for (const SimpleGraph& h : enumerate_by_edges(9, true)) {
    if (h.edge_count() < 2) continue;
    const SimpleGraph l = line_graph(h).graph;
    const LineGraphRoot r = root_of_line_graph(l);
    CHECK(is_triangle_free(r.root));
    CHECK(bijection_is_isomorphism(l, r));
    CHECK(verify_root(l, r));
    CHECK(are_isomorphic(r.root, h));
    const Multigraph m = r.as_multigraph();
    for (Vertex v = 0; v < l.vertex_count(); ++v) {
      const Edge& e = m.edge(v);
      CHECK(r.vertex_for(e.u, e.v) == v);
    }
  }
}

TEST_CASE("closures of claw-free graphs have triangle-free roots") {
  for (int n = 1; n <= 7; ++n)
    for (const SimpleGraph& g : enumerate_connected_claw_free(n)) {
      const SimpleGraph cl = compute_closure(g).final;
      const LineGraphRoot r = root_of_line_graph(cl);
      CHECK(is_triangle_free(r.root));
      CHECK(bijection_is_isomorphism(cl, r));
      // Each Krausz clique is a clique of cl and every vertex sits in at most two.
      std::vector<int> count(n, 0);
      for (const auto& c : r.cliques) {
        for (std::size_t i = 0; i < c.size(); ++i) {
          ++count[c[i]];
          for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(cl.has_edge(c[i], c[j]));
        }
      }
      for (int k : count) CHECK(k <= 2);
    }
}

TEST_CASE("maximal cliques") {
  SimpleGraph diamond = oracle::complete(4);
  diamond.remove_edge(0, 1);
  CHECK(maximal_cliques(diamond) == std::vector<std::vector<Vertex>>{{0, 2, 3}, {1, 2, 3}});
  CHECK(maximal_cliques(oracle::path(3)) == std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}});
}
