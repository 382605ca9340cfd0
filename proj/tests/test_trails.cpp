#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clawham/enumerate.hpp"
#include "clawham/generators.hpp"
#include "clawham/linegraph.hpp"
#include "clawham/trails.hpp"
#include "oracles.hpp"

using namespace clawham;

namespace {

Multigraph star3() { return oracle::multi(4, {{0, 1}, {0, 2}, {0, 3}}); }
Multigraph p4() { return Multigraph::from_simple(oracle::path(4)); }
Multigraph c5() { return Multigraph::from_simple(oracle::cycle(5)); }

std::uint32_t mask_of(const ClosedTrail& t) {
  std::uint32_t m = 0;
  for (Vertex v : t.vertices) m |= 1u << v;
  return m;
}

}  // namespace

TEST_CASE("domination") {
  CHECK(dominates(star3(), ClosedTrail::single(0)));
  CHECK_FALSE(dominates(p4(), ClosedTrail::single(1)));
  // Edge ids follow edges(): 01 04 12 23 34.
  const ClosedTrail whole{{0, 1, 2, 3, 4, 0}, {0, 2, 3, 4, 1}};
  REQUIRE(is_closed_trail(c5(), whole));
  CHECK(dominates(c5(), whole));
  const ClosedTrail broken{{0, 1, 2, 0}, {0, 1, 4}};
  CHECK_FALSE(is_closed_trail(c5(), broken));
  CHECK_THROWS_AS(dominates(c5(), broken), Error);
}

TEST_CASE("trail validation") {
  const Multigraph two = oracle::multi(2, {{0, 1}, {0, 1}});
  CHECK(is_closed_trail(two, {{0, 1, 0}, {0, 1}}));
  CHECK_FALSE(is_closed_trail(two, {{0, 1, 0}, {0, 0}}));  // repeated edge
  CHECK_FALSE(is_closed_trail(two, {{0, 1}, {0}}));        // not closed
  CHECK_FALSE(is_closed_trail(two, {{}, {}}));
  CHECK(is_closed_trail(two, ClosedTrail::single(1)));
  CHECK_FALSE(is_closed_trail(two, ClosedTrail::single(2)));
}

TEST_CASE("find_dct examples") {
  const auto s = find_dct(star3());
  REQUIRE(s.found());
  CHECK(s.witness->edges.empty());
  CHECK(s.witness->vertices == std::vector<Vertex>{0});
  CHECK(find_dct(p4()).absent());
  const auto c = find_dct(c5());
  REQUIRE(c.found());
  CHECK(c.witness->edges.size() == 5);
  CHECK(is_dct(c5(), *c.witness));

  CHECK(find_dct_through(star3(), 0).found());
  for (Vertex x = 0; x < 5; ++x) {
    const auto t = find_dct_through(c5(), x);
    REQUIRE(t.found());
    CHECK(t.witness->contains(x));
  }
  // A leaf of the star lies on no closed trail but itself, which misses edges.
  CHECK(find_dct_through(star3(), 1).absent());
}

TEST_CASE("euler tours") {
  const Multigraph k4 = Multigraph::from_simple(oracle::complete(4));
  // Edges of K4 in edges() order: 01 02 03 12 13 23; the 4-cycle 0-1-2-3.
  const EdgeId cyc[] = {0, 3, 5, 2};
  const ClosedTrail t = euler_tour(k4, cyc);
  CHECK(is_closed_trail(k4, t));
  CHECK(t.vertices.front() == 0);
  const EdgeId odd[] = {0, 1};
  CHECK_THROWS_AS(euler_tour(k4, odd), Error);
}

TEST_CASE("find_dct agrees with closed-trail enumeration") {
  int with = 0, without = 0;
  for (const Multigraph& h : enumerate_multigraphs_by_edges(7)) {
    const auto r = find_dct(h);
    REQUIRE_FALSE(r.inconclusive());
    CHECK(r.found() == oracle::has_dct(h));
    if (r.found()) {
      CHECK(is_dct(h, *r.witness));
      ++with;
    } else {
      ++without;
    }
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
      const auto t = find_dct_through(h, x);
      CHECK(t.found() == oracle::has_dct(h, 1u << x));
      if (t.found()) CHECK((mask_of(*t.witness) >> x & 1));
    }
  }
  CHECK(with > 0);
  CHECK(without > 0);
}

TEST_CASE("find_dct_containing") {
  const Multigraph h = Multigraph::from_simple(oracle::cycle(6));
  const Vertex req[] = {0, 3};
  const auto r = find_dct_containing(h, req);
  REQUIRE(r.found());
  CHECK(r.witness->contains(0));
  CHECK(r.witness->contains(3));
  const Vertex leafy[] = {1, 3};
  CHECK(find_dct_containing(star3(), leafy).absent());
}

TEST_CASE("hamiltonian cycles") {
  const auto k3 = hamiltonian_cycle(oracle::complete(3));
  REQUIRE(k3.found());
  CHECK(is_hamiltonian_cycle(oracle::complete(3), *k3.witness));
  CHECK(hamiltonian_cycle(oracle::path(3)).absent());
  CHECK(hamiltonian_cycle(named_small("petersen")).absent());
  CHECK(hamiltonian_cycle(SimpleGraph(1)).absent());
  CHECK_FALSE(is_hamiltonian_cycle(oracle::cycle(5), {0, 1, 2, 3}));
  CHECK_FALSE(is_hamiltonian_cycle(oracle::cycle(5), {0, 2, 1, 3, 4}));

  for (int n = 3; n <= 7; ++n)
    for (const SimpleGraph& g : enumerate_connected(n)) {
      const auto c = hamiltonian_cycle(g);
      CHECK(c.found() == oracle::hamiltonian(g));
      if (c.found()) CHECK(is_hamiltonian_cycle(g, *c.witness));
    }
}

TEST_CASE("budgets give inconclusive, never a wrong answer") {
  CHECK(hamiltonian_cycle(named_small("petersen"), {3}).inconclusive());
  CHECK(find_dct(Multigraph::from_simple(oracle::path(8)), {1}).inconclusive());
  CHECK_THROWS_AS(hn_check(oracle::path(8), {1}), Error);
}

TEST_CASE("line graph hamiltonicity versus DCTs") {
  CHECK(hn_check(named_small("claw")));
  CHECK_FALSE(hn_check(oracle::path(4)));
  CHECK(hn_check(oracle::cycle(6)));
  try {
    hn_check(oracle::path(3));
    FAIL("two edges are below the precondition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }
  for (const SimpleGraph& h : enumerate_by_edges(8, true)) {
    if (h.edge_count() < 3) continue;
    CHECK(hn_check(h) == oracle::hamiltonian(oracle::line_graph(h)));
  }
}
