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

SimpleGraph diamond() {
  SimpleGraph g = oracle::complete(4);
  g.remove_edge(0, 1);
  return g;
}

bool in(const std::vector<Vertex>& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

bool is_clique(const SimpleGraph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

bool induced_net(const SimpleGraph& g, const NetWitness& w) {
  const Vertex vs[] = {w.x[0], w.x[1], w.x[2], w.y[0], w.y[1], w.y[2]};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (vs[i] == vs[j]) return false;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const bool want = (i < 3 && j < 3) || (i < 3 && j == i + 3);
      if (g.has_edge(vs[i], vs[j]) != want) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("local completion") {
  CHECK(local_completion(diamond(), 2) == oracle::complete(4));
  CHECK(local_completion(oracle::complete(4), 1) == oracle::complete(4));
  try {
    local_completion(oracle::cycle(6), 0);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }
}

TEST_CASE("closure examples") {
  const ClosureTrace c6 = compute_closure(oracle::cycle(6));
  CHECK(c6.final == oracle::cycle(6));
  CHECK(c6.steps.empty());

  const ClosureTrace d = compute_closure(diamond());
  CHECK(d.final == oracle::complete(4));
  REQUIRE(d.steps.size() == 1);
  CHECK(d.steps[0].vertex == 2);
  CHECK(d.steps[0].added == std::vector<VertexPair>{{0, 1}});
  CHECK(d.edges_added() == 1);
  CHECK(d.graph_at(0) == diamond());
  validate_trace(d);

  CHECK_THROWS_AS(compute_closure(named_small("claw")), Error);
  CHECK_THROWS_AS(compute_closure(named_small("petersen")), Error);
}

TEST_CASE("line graphs of triangle-free graphs are already closed") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SimpleGraph l = line_graph(random_triangle_free(1 + static_cast<int>(seed % 14), seed)).graph;
    const ClosureTrace t = compute_closure(l);
    CHECK(t.steps.empty());
    CHECK(t.final == l);
  }
}

TEST_CASE("closure agrees with a randomised definition-level closure") {
  for (int n = 1; n <= 7; ++n)
    for (const SimpleGraph& g : enumerate_connected_claw_free(n)) {
      const ClosureTrace t = compute_closure(g);
      CHECK(t.final == oracle::naive_closure(g, static_cast<std::uint64_t>(n)));
      CHECK(t.final == compute_closure(g, {ClosureOrder::kHighestFirst, 0}).final);
      CHECK(t.final == compute_closure(g, {ClosureOrder::kSeeded, 99}).final);
    }
}

TEST_CASE("closure properties along the trace") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const SimpleGraph root = random_pendant_root(seed);
    const SimpleGraph g = split_clique_preimage(root, seed);
    const ClosureTrace t = compute_closure(g);
    validate_trace(t);
    for (std::size_t i = 0; i <= t.steps.size(); ++i) {
      const SimpleGraph gi = t.graph_at(i);
      CHECK_FALSE(oracle::has_claw(gi));
      if (i == 0) continue;
      // Local disconnection never appears along the way.
      const SimpleGraph prev = t.graph_at(i - 1);
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (oracle::nbhd_connected(prev, v)) CHECK(oracle::nbhd_connected(gi, v));
      CHECK(oracle::nbhd_connected(prev, t.steps[i - 1].vertex));
      CHECK_FALSE(oracle::nbhd_clique(prev, t.steps[i - 1].vertex));
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      CHECK_FALSE((oracle::nbhd_connected(t.final, v) && !oracle::nbhd_clique(t.final, v)));
    CHECK(are_isomorphic(t.final, oracle::line_graph(root)));
    if (g.vertex_count() <= 16) CHECK(oracle::hamiltonian(g) == oracle::hamiltonian(t.final));
  }
}

TEST_CASE("trace validation rejects tampering") {
  ClosureTrace t = compute_closure(diamond());
  t.steps[0].vertex = 0;
  CHECK_THROWS_AS(validate_trace(t), Error);
  ClosureTrace u = compute_closure(diamond());
  u.final = diamond();
  CHECK_THROWS_AS(validate_trace(u), Error);
}

TEST_CASE("net back-tracing") {
  SUBCASE("empty trace returns the net") {
    const SimpleGraph net = named_small("net");
    const ClosureTrace t = compute_closure(net);
    REQUIRE(t.steps.empty());
    const NetWitness w = find_induced_nets(net).front();
    CHECK(backtrace_net(t, w, net_cliques(t.final, w)) == w);
  }

  SUBCASE("outputs are induced nets inside the membership sets") {
    int checked = 0, through_steps = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const SimpleGraph g = split_clique_preimage(random_pendant_root(seed), seed + 7);
      const ClosureTrace t = compute_closure(g);
      std::vector<Vertex> lc;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (oracle::nbhd_connected(t.final, v)) lc.push_back(v);
      for (const NetWitness& net : find_induced_nets(t.final)) {
        const NetCliques r = net_cliques(t.final, net);
        CHECK(is_clique(t.final, r.r0));
        for (Vertex x : net.x) CHECK(in(r.r0, x));
        for (int j = 0; j < 3; ++j) {
          CHECK(is_clique(t.final, r.r[j]));
          CHECK(in(r.r[j], net.x[j]));
          CHECK(in(r.r[j], net.y[j]));
        }
        const NetWitness back = backtrace_net(t, net, r);
        CHECK(induced_net(g, back));
        for (int j = 0; j < 3; ++j) {
          const Vertex x0 = back.x[j], y0 = back.y[j];
          CHECK((x0 == net.x[j] || (in(r.r0, x0) && in(lc, x0))));
          CHECK((y0 == net.x[j] || y0 == net.y[j] ||
                 ((in(r.r0, y0) || in(r.r[j], y0)) && in(lc, y0))));
        }
        const bool triangle = g.has_edge(net.x[0], net.x[1]) && g.has_edge(net.x[1], net.x[2]) &&
                              g.has_edge(net.x[0], net.x[2]);
        if (triangle)
          for (int j = 0; j < 3; ++j)
            CHECK((back.y[j] == net.y[j] || (in(r.r[j], back.y[j]) && in(lc, back.y[j]))));
        ++checked;
        if (!t.steps.empty()) ++through_steps;
      }
    }
    CHECK(checked > 50);
    CHECK(through_steps > 20);
  }
}
