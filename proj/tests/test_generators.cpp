#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clawham/closure.hpp"
#include "clawham/detect.hpp"
#include "clawham/generators.hpp"
#include "clawham/iso.hpp"
#include "clawham/linegraph.hpp"
#include "clawham/trails.hpp"
#include "oracles.hpp"

using namespace clawham;

namespace {

std::vector<int> degree_sequence(const SimpleGraph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace

TEST_CASE("sharpness graphs") {
  const SimpleGraph s3 = sharpness_graph(3);
  CHECK(s3.vertex_count() == 9);
  CHECK(s3.edge_count() == 15);
  CHECK_FALSE(oracle::hamiltonian(s3));
  CHECK(hamiltonian_cycle(s3).absent());
  for (int m = 3; m <= 6; ++m) {
    const SimpleGraph s = sharpness_graph(m);
    CHECK(s.edge_count() == 3 * m * (m - 1) / 2 + 6);
    CHECK_FALSE(oracle::has_claw(s));
    CHECK(is_2_connected(s));
    for (int i = 0; i < 3; ++i) {
      // Exactly one short of the (n - 2) / 3 threshold in thirds.
      CHECK(3 * s.degree(sharpness_z(m, i)) == s.vertex_count() - 3);
      CHECK(s.has_edge(sharpness_x(m, i), sharpness_x(m, (i + 1) % 3)));
      CHECK(s.has_edge(sharpness_y(m, i), sharpness_y(m, (i + 1) % 3)));
    }
  }
  CHECK(sharpness_graph(4).degree(sharpness_z(4, 1)) == 3);
  CHECK_THROWS_AS(sharpness_graph(2), Error);
}

TEST_CASE("F members") {
  CHECK(brousek_F(parse_fspec("p2,p2,p2")).graph.vertex_count() == 9);
  CHECK(brousek_F(parse_fspec("t,t,t")).graph.vertex_count() == 9);
  CHECK(brousek_F(parse_fspec("p4,p3,t")).graph.vertex_count() == 6 + 3 + 2 + 1);
  const char* kinds[] = {"p2", "p3", "p4", "t"};
  for (const char* a : kinds)
    for (const char* b : kinds)
      for (const char* c : kinds) {
        const std::string spec = std::string(a) + "," + b + "," + c;
        const FMember f = brousek_F(parse_fspec(spec));
        CHECK(format_fspec(parse_fspec(spec)) == spec);
        CHECK_FALSE(oracle::has_claw(f.graph));
        CHECK(is_2_connected(f.graph));
        CHECK_FALSE(oracle::hamiltonian(f.graph));
        CHECK(is_induced_F_member(f.graph, f.witness));
        CHECK(f.witness.a == std::array<Vertex, 3>{0, 1, 2});
        CHECK(f.witness.b == std::array<Vertex, 3>{3, 4, 5});
      }
  for (const char* bad : {"p1,p2,p2", "p2,p2", "q2,p2,p2", "", "p2,p2,p2,p2"})
    CHECK_THROWS_AS(parse_fspec(bad), Error);
}

TEST_CASE("named graphs") {
  const SimpleGraph net = named_small("net");
  CHECK(net.vertex_count() == 6);
  CHECK(net.edge_count() == 6);
  CHECK(degree_sequence(net) == std::vector<int>{3, 3, 3, 1, 1, 1});
  const SimpleGraph k33m = named_small("k33_minus");
  CHECK(k33m.vertex_count() == 6);
  CHECK(k33m.edge_count() == 8);
  CHECK_FALSE(k33m.has_edge(2, 5));
  const SimpleGraph sc = named_small("subdivided_claw");
  CHECK(sc.vertex_count() == 7);
  CHECK(sc.edge_count() == 6);
  CHECK(named_small("k33").edge_count() == 9);
  CHECK(degree_sequence(named_small("petersen")) == std::vector<int>(10, 3));
  CHECK(named_small("cycle", 5) == oracle::cycle(5));
  CHECK(named_small("path", 4) == oracle::path(4));
  CHECK(named_small("complete", 4) == oracle::complete(4));
  CHECK(degree_sequence(named_small("claw")) == std::vector<int>{3, 1, 1, 1});
  CHECK_THROWS_AS(named_small("dodecahedron"), Error);
  CHECK_THROWS_AS(named_small("cycle", 2), Error);
}

TEST_CASE("random generators") {
  for (auto strategy : {RandomStrategy::kLineGraph, RandomStrategy::kLineGraphThinned}) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const int n = 1 + static_cast<int>(seed % 14);
      const SimpleGraph g = random_claw_free(n, seed, strategy);
      CHECK(g.vertex_count() == n);
      CHECK_FALSE(oracle::has_claw(g));
      CHECK(oracle::connected(g));
      CHECK(g == random_claw_free(n, seed, strategy));
    }
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int m = 1 + static_cast<int>(seed % 20);
    const SimpleGraph h = random_triangle_free(m, seed);
    CHECK(h.edge_count() == m);
    CHECK_FALSE(oracle::has_triangle(h));
    CHECK(oracle::connected(h));
    CHECK(h == random_triangle_free(m, seed));
  }
  CHECK_THROWS_AS(random_claw_free(0, 1, RandomStrategy::kLineGraph), Error);
}

TEST_CASE("clique-splitting preimages close back to the line graph") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SimpleGraph root = random_pendant_root(seed);
    CHECK(root.edge_count() >= 6);
    CHECK_FALSE(oracle::has_triangle(root));
    const SimpleGraph g = split_clique_preimage(root, seed);
    CHECK_FALSE(oracle::has_claw(g));
    // Vertex v of g is edge v of root.edges(), so the closure is L(root) itself.
    CHECK(compute_closure(g).final == oracle::line_graph(root));
    CHECK(g == split_clique_preimage(root, seed));
  }
}

TEST_CASE("relabel") {
  const SimpleGraph p = oracle::path(3);
  const SimpleGraph q = relabel(p, {2, 0, 1});
  CHECK(q.has_edge(2, 0));
  CHECK(q.has_edge(0, 1));
  CHECK_FALSE(q.has_edge(2, 1));
  CHECK_THROWS_AS(relabel(p, {0, 0, 1}), Error);
}
