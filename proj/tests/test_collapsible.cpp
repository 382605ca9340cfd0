#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clawham/collapsible.hpp"
#include "clawham/enumerate.hpp"
#include "clawham/generators.hpp"
#include "oracles.hpp"

using namespace clawham;

namespace {

Multigraph simple(const SimpleGraph& g) { return Multigraph::from_simple(g); }

// Two triangles 0-1-2 and 2-3-4 sharing vertex 2.
Multigraph bowtie() { return oracle::multi(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

void check_all_witnesses(const Multigraph& h, const CollapsibleResult& r) {
  const int n = h.vertex_count();
  CHECK(r.witnesses.size() == (std::size_t{1} << (n - 1)));
  for (const auto& [mask, w] : r.witnesses) {
    CHECK(std::popcount(mask) % 2 == 0);
    CHECK(is_parity_witness(h, w));
    // Independent parity recount.
    std::vector<int> deg(n, 0);
    for (EdgeId e : w.subgraph) ++deg[h.edge(e).u], ++deg[h.edge(e).v];
    for (Vertex v = 0; v < n; ++v) CHECK((deg[v] % 2 == 1) == bool(mask >> v & 1));
  }
}

}  // namespace

TEST_CASE("known certificates") {
  for (const char* name : {"k33", "k33_minus"}) {
    const Multigraph h = simple(named_small(name));
    const CollapsibleResult r = is_collapsible(h);
    REQUIRE(r.collapsible());
    check_all_witnesses(h, r);
  }
  const CollapsibleResult c4 = is_collapsible(simple(oracle::cycle(4)));
  CHECK_FALSE(c4.collapsible());
  REQUIRE(c4.failing_demand.size() == 2);
  CHECK(c4.failing_demand[1] - c4.failing_demand[0] == 2);  // antipodal pair

  CHECK(is_collapsible(oracle::multi(2, {{0, 1}, {0, 1}})).collapsible());
  CHECK(is_collapsible(simple(oracle::cycle(3))).collapsible());
  CHECK_FALSE(is_collapsible(oracle::multi(2, {{0, 1}})).collapsible());
  CHECK(collapsible_or_trivial(Multigraph(1)));
  CHECK_THROWS_AS(is_collapsible(Multigraph(1)), Error);
  CHECK(is_collapsible(simple(oracle::complete(7))).status == SearchStatus::kInconclusive);
}

TEST_CASE("collapsibility matches the definition") {
  int yes = 0;
  for (const Multigraph& h : enumerate_multigraphs_by_edges(7)) {
    if (h.vertex_count() < 2) continue;
    const CollapsibleResult r = is_collapsible(h);
    CHECK(r.collapsible() == oracle::collapsible(h));
    if (r.collapsible()) {
      check_all_witnesses(h, r);
      ++yes;
    }
  }
  CHECK(yes > 10);
}

TEST_CASE("parity witnesses") {
  const Multigraph k33 = simple(named_small("k33"));
  const Vertex s[] = {0, 3};
  const auto w = parity_witness(k33, s);
  REQUIRE(w);
  CHECK(is_parity_witness(k33, *w));
  const Vertex odd[] = {0, 1, 3};
  CHECK_THROWS_AS(parity_witness(k33, odd), Error);
  SpanningParityWitness bogus{{0, 3}, {}};
  CHECK_FALSE(is_parity_witness(k33, bogus));
}

TEST_CASE("lifting through a contraction") {
  SUBCASE("a single vertex lifts to itself") {
    const Multigraph c5 = simple(oracle::cycle(5));
    const Vertex f[] = {2};
    const Contraction c = contract(c5, f);
    const auto t = find_dct_through(c.graph, c.merged);
    REQUIRE(t.found());
    const ClosedTrail lifted = catlin_lift_dct(c5, f, *t.witness);
    CHECK(lifted.edges.size() == t.witness->edges.size());
    CHECK(is_dct(c5, lifted));
  }

  SUBCASE("bowtie") {
    const Multigraph h = bowtie();
    const Vertex f[] = {0, 1, 2};
    const Contraction c = contract(h, f);
    const auto t = find_dct_through(c.graph, c.merged);
    REQUIRE(t.found());
    const ClosedTrail lifted = catlin_lift_dct(h, f, *t.witness);
    CHECK(is_dct(h, lifted));
    CHECK(lifted.vertex_set() == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(lifted.edges.size() == 6);
  }

  SUBCASE("preconditions") {
    const Multigraph c4 = simple(oracle::cycle(4));
    const Vertex edge[] = {0, 1};
    const Contraction c = contract(c4, edge);
    const auto t = find_dct_through(c.graph, c.merged);
    REQUIRE(t.found());
    CHECK_THROWS_AS(catlin_lift_dct(c4, edge, *t.witness), Error);
  }
}

TEST_CASE("composition") {
  const Multigraph k4 = simple(oracle::complete(4));
  const Vertex tri[] = {0, 1, 2};
  CHECK(catlin_collapsible_compose(k4, tri));
  CHECK(oracle::collapsible(k4));
  const Vertex all[] = {0, 1, 2, 3};
  CHECK(catlin_collapsible_compose(k4, all));
  const Vertex edge[] = {0, 1};
  try {
    catlin_collapsible_compose(simple(oracle::cycle(4)), edge);
    FAIL("a single edge is not collapsible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }

  SUBCASE("agrees with brute force") {
    for (const Multigraph& h : enumerate_multigraphs_by_edges(6)) {
      const int n = h.vertex_count();
      if (n < 3) continue;
      for (std::uint32_t fm = 1; fm < (1u << n); ++fm) {
        if (std::popcount(fm) < 2) continue;
        std::vector<Vertex> f;
        for (Vertex v = 0; v < n; ++v)
          if (fm >> v & 1) f.push_back(v);
        if (!oracle::collapsible(induced_submultigraph(h, f).graph)) continue;
        const bool contracted = collapsible_or_trivial(contract(h, f).graph);
        CHECK(catlin_collapsible_compose(h, f) == contracted);
        if (contracted) CHECK(oracle::collapsible(h));
      }
    }
  }
}

TEST_CASE("reduction by certificates") {
  const Reduction k33 = reduce_by_certificates(simple(named_small("k33")));
  CHECK(k33.reduced.vertex_count() == 1);
  REQUIRE_FALSE(k33.log.empty());
  CHECK(k33.log.front().certificate == Certificate::kK33);

  const Reduction c5 = reduce_by_certificates(simple(oracle::cycle(5)));
  CHECK(c5.log.empty());
  CHECK(c5.reduced.edge_count() == 5);

  const Reduction k33m = reduce_by_certificates(simple(named_small("k33_minus")));
  CHECK(k33m.reduced.vertex_count() == 1);
  CHECK(k33m.log.front().certificate == Certificate::kK33Minus);

  // A 4-cycle with a chord: the triangles go first, then the 2-cycle.
  const Reduction d = reduce_by_certificates(oracle::multi(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}));
  CHECK(d.reduced.vertex_count() == 1);
  CHECK(d.log.front().certificate == Certificate::kThreeCycle);

  SUBCASE("lifting a reduced DCT gives a DCT of the original") {
    for (const Multigraph& h : enumerate_multigraphs_by_edges(7)) {
      const Reduction r = reduce_by_certificates(h);
      const auto merged = merged_vertices(r);
      const auto t = find_dct_containing(r.reduced, merged);
      CHECK(t.found() == oracle::has_dct(h));
      if (!t.found()) continue;
      const ClosedTrail lifted = lift_through_reduction(r, *t.witness);
      CHECK(is_dct(h, lifted));
    }
  }
}
