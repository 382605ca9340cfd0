#include "clawham/conditions.hpp"

#include <algorithm>
#include <string>

namespace clawham {

bool is_heavy(const Multigraph& h, EdgeId e) {
  require(h.has_edge_id(e), ErrorCode::kInvalidInput,
          "is_heavy: edge id " + std::to_string(e) + " not in graph");
  return at_least_threshold(edge_degree(h, e), h.edge_count());
}

namespace {

bool share_endpoint(const Edge& a, const Edge& b) {
  return a.touches(b.u) || a.touches(b.v);
}

bool extend_matching(const Multigraph& h, const std::vector<EdgeId>& heavy,
                     std::size_t from, int k, std::vector<EdgeId>& chosen) {
  if (static_cast<int>(chosen.size()) == k) return true;
  for (std::size_t i = from; i < heavy.size(); ++i) {
    if (heavy.size() - i < static_cast<std::size_t>(k) - chosen.size()) break;
    const Edge& e = h.edge(heavy[i]);
    bool ok = true;
    for (EdgeId c : chosen)
      if (share_endpoint(e, h.edge(c))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(heavy[i]);
    if (extend_matching(h, heavy, i + 1, k, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<HeavyMatching> find_heavy_matching(const Multigraph& h, int k) {
  require(k >= 1, ErrorCode::kInvalidInput,
          "find_heavy_matching: k must be positive");
  std::vector<EdgeId> heavy;
  for (const Edge& e : h.edges())
    if (is_heavy(h, e.id)) heavy.push_back(e.id);
  std::vector<EdgeId> chosen;
  if (!extend_matching(h, heavy, 0, k, chosen)) return std::nullopt;
  return HeavyMatching{chosen, third_threshold(h.edge_count())};
}

bool heavy_matching_size_bound_holds(const Multigraph& h,
                                     const HeavyMatching& m) {
  // |E| >= sum ed(e_i) + |M| - sum_{i<j} |N(e_i) ∩ N(e_j)|, each overlap <= 2
  // in a triangle-free graph, and heaviness then forces |E| <= 32.
  const int k = static_cast<int>(m.edges.size());
  std::vector<std::vector<EdgeId>> nbhd;
  long long lower = k;
  for (EdgeId e : m.edges) {
    require(is_heavy(h, e), ErrorCode::kInvalidInput,
            "heavy matching contains a light edge");
    nbhd.push_back(edge_neighborhood(h, e));
    std::sort(nbhd.back().begin(), nbhd.back().end());
    lower += static_cast<long long>(nbhd.back().size());
  }
  bool overlaps_ok = true;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<EdgeId> common;
      std::set_intersection(nbhd[i].begin(), nbhd[i].end(), nbhd[j].begin(),
                            nbhd[j].end(), std::back_inserter(common));
      if (common.size() > 2) overlaps_ok = false;
      lower -= static_cast<long long>(common.size());
    }
  const bool union_ok = h.edge_count() >= lower;
  if (k != 4) return overlaps_ok && union_ok;
  return overlaps_ok && union_ok && h.edge_count() <= 32;
}

BroersmaResult broersma_condition(const SimpleGraph& g) {
  const int n = g.vertex_count();
  for (const NetWitness& net : find_induced_nets(g))
    for (Vertex y : net.y)
      if (!at_least_threshold(g.degree(y), n)) return {false, net, y};
  return {};
}

ClassicalConditions classical_conditions(const SimpleGraph& g) {
  const int n = g.vertex_count();
  bool min_ok = true;
  for (Vertex v = 0; v < n; ++v)
    if (!at_least_threshold(g.degree(v), n)) {
      min_ok = false;
      break;
    }
  return {min_ok, find_induced_nets(g).empty()};
}

namespace {

int edge_id_of(const Multigraph& h, VertexPair p) {
  for (EdgeId id : h.incident(p.first))
    if (h.edge(id).touches(p.second)) return id;
  fail(ErrorCode::kPrecondition, "matching edge (" + std::to_string(p.first) +
                                     "," + std::to_string(p.second) +
                                     ") not in graph");
}

void require_lemma_hypotheses(const SimpleGraph& h, const Multigraph& mh,
                              const TrailSearchOptions& opts) {
  require(is_triangle_free(h), ErrorCode::kPrecondition,
          "matching bound: graph has a triangle");
  require(is_connected(mh) && is_essentially_k_edge_connected(mh, 2),
          ErrorCode::kPrecondition,
          "matching bound: graph not essentially 2-edge-connected");
  const auto dct = find_dct(mh, opts);
  if (dct.inconclusive())
    fail(ErrorCode::kInconclusive, "matching bound: DCT search ran out of budget");
  require(dct.absent(), ErrorCode::kPrecondition,
          "matching bound: graph has a DCT");
}

bool sum_bound(const Multigraph& mh, const std::array<EdgeId, 3>& ids) {
  int sum = 0;
  for (EdgeId id : ids) sum += edge_degree(mh, id);
  return sum <= mh.edge_count() + 1;
}

}  // namespace

bool matching_sum_bound_check(const SimpleGraph& h,
                              const std::array<VertexPair, 3>& m,
                              const TrailSearchOptions& opts) {
  const Multigraph mh = Multigraph::from_simple(h);
  std::array<EdgeId, 3> ids{};
  for (int i = 0; i < 3; ++i) ids[i] = edge_id_of(mh, m[i]);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      require(!share_endpoint(mh.edge(ids[i]), mh.edge(ids[j])),
              ErrorCode::kPrecondition, "matching bound: edges not a matching");
  require_lemma_hypotheses(h, mh, opts);
  return sum_bound(mh, ids);
}

MatchingSumSummary matching_sum_bound_all(const SimpleGraph& h,
                                          const TrailSearchOptions& opts) {
  const Multigraph mh = Multigraph::from_simple(h);
  const auto es = mh.edges();
  std::vector<std::array<EdgeId, 3>> triples;
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      if (share_endpoint(es[a], es[b])) continue;
      for (std::size_t c = b + 1; c < es.size(); ++c)
        if (!share_endpoint(es[a], es[c]) && !share_endpoint(es[b], es[c]))
          triples.push_back({es[a].id, es[b].id, es[c].id});
    }
  MatchingSumSummary out;
  if (triples.empty()) return out;
  require_lemma_hypotheses(h, mh, opts);
  for (const auto& t : triples) {
    ++out.matchings;
    if (sum_bound(mh, t)) continue;
    ++out.violations;
    if (!out.first_violation) {
      std::array<VertexPair, 3> pairs;
      for (int i = 0; i < 3; ++i)
        pairs[i] = {mh.edge(t[i]).u, mh.edge(t[i]).v};
      out.first_violation = pairs;
    }
  }
  return out;
}

bool SubdividedClawCertificate::all_ok() const {
  if (!triangle_equivalence_ok) return false;
  for (const ArmCertificate& a : arms)
    if (!a.heavy || !a.x_location_ok || !a.y_location_ok ||
        (a.boosted && !a.boost_ok))
      return false;
  return true;
}

namespace {

bool contains(const std::vector<Vertex>& xs, Vertex v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

std::vector<Vertex> sorted_copy(std::vector<Vertex> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

SubdividedClawCertificate subdivided_claw_heavy_edges(
    const SimpleGraph& g, const LineGraphRoot& root,
    const SubdividedClawWitness& lam) {
  require(g.vertex_count() >= 3, ErrorCode::kPrecondition,
          "heavy-edge certificate: need at least 3 vertices");
  require(is_claw_free(g), ErrorCode::kPrecondition,
          "heavy-edge certificate: graph has a claw");
  require(is_2_connected(g), ErrorCode::kPrecondition,
          "heavy-edge certificate: graph not 2-connected");
  require(broersma_condition(g).ok, ErrorCode::kPrecondition,
          "heavy-edge certificate: net endvertex degree condition fails");
  require(is_subdivided_claw(root.root, lam), ErrorCode::kPrecondition,
          "heavy-edge certificate: not a subdivided claw of the root");

  const ClosureTrace trace = compute_closure(g);
  require(verify_root(trace.final, root), ErrorCode::kPrecondition,
          "heavy-edge certificate: root does not match the closure");

  const Multigraph h = root.as_multigraph();
  const int m = h.edge_count();

  NetWitness net{};
  NetCliques cl;
  cl.r0 = sorted_copy(root.cliques[lam.center]);
  for (int i = 0; i < 3; ++i) {
    const auto x = root.vertex_for(lam.center, lam.inner[i]);
    const auto y = root.vertex_for(lam.inner[i], lam.outer[i]);
    require(x && y, ErrorCode::kInternal,
            "heavy-edge certificate: subdivided claw edge missing from root");
    net.x[i] = *x;
    net.y[i] = *y;
    cl.r[i] = sorted_copy(root.cliques[lam.inner[i]]);
  }

  SubdividedClawCertificate out{};
  out.net_in_closure = net;
  out.net_in_g = backtrace_net(trace, net, cl);

  const std::vector<Vertex> l0 = pendant_edges(h, lam.center);
  std::array<std::vector<Vertex>, 3> li;
  for (int i = 0; i < 3; ++i) li[i] = pendant_edges(h, lam.inner[i]);

  std::array<bool, 3> boosted{};
  for (int i = 0; i < 3; ++i) {
    const Vertex y = out.net_in_g.y[i];
    boosted[i] = y == net.x[i] || contains(l0, y);
  }

  bool all_own_side = true;
  for (int i = 0; i < 3; ++i) {
    ArmCertificate& a = out.arms[i];
    a.x_prime = out.net_in_g.x[i];
    a.y_prime = out.net_in_g.y[i];
    a.edge_degree = edge_degree(h, a.y_prime);
    a.heavy = is_heavy(h, a.y_prime);
    a.x_location_ok = a.x_prime == net.x[i] || contains(l0, a.x_prime);
    a.y_location_ok = a.y_prime == net.y[i] || a.y_prime == net.x[i] ||
                      contains(li[i], a.y_prime) || contains(l0, a.y_prime);
    a.boosted = boosted[i];
    a.j_size = 0;
    a.boost_ok = true;
    if (a.boosted) {
      for (int j = 0; j < 3; ++j)
        if (j != i && boosted[j]) ++a.j_size;
      a.boost_ok = 3LL * a.edge_degree >= (m - 2) + 3LL * (2 + a.j_size);
    }
    a.on_own_side = a.y_prime == net.y[i] || contains(li[i], a.y_prime);
    all_own_side = all_own_side && a.on_own_side;
  }
  const auto& x = out.net_in_closure.x;
  out.triangle_in_g =
      g.has_edge(x[0], x[1]) && g.has_edge(x[1], x[2]) && g.has_edge(x[0], x[2]);
  out.triangle_equivalence_ok = out.triangle_in_g == all_own_side;
  return out;
}

const char* to_string(DichotomyKind k) {
  switch (k) {
    case DichotomyKind::kHasDct: return "has_dct";
    case DichotomyKind::kHasHeavyMatching4: return "has_heavy_matching_4";
    case DichotomyKind::kViolation: return "violation";
    case DichotomyKind::kInconclusive: return "inconclusive";
  }
  return "?";
}

DichotomyResult main_dichotomy_check(const SimpleGraph& h,
                                     const TrailSearchOptions& opts) {
  const Multigraph mh = Multigraph::from_simple(h);
  const auto dct = find_dct(mh, opts);
  if (dct.found()) return {DichotomyKind::kHasDct, dct.witness, std::nullopt, true};
  if (auto hm = find_heavy_matching(mh, 4)) {
    const bool bound = heavy_matching_size_bound_holds(mh, *hm);
    return {DichotomyKind::kHasHeavyMatching4, std::nullopt, std::move(hm), bound};
  }
  if (dct.inconclusive())
    return {DichotomyKind::kInconclusive, std::nullopt, std::nullopt, true};
  return {DichotomyKind::kViolation, std::nullopt, std::nullopt, true};
}

}  // namespace clawham
