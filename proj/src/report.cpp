#include "clawham/report.hpp"

namespace clawham {

namespace {

Json pair_list(const std::vector<VertexPair>& ps) {
  Json a = Json::array();
  for (auto [u, v] : ps) a.push_back({u, v});
  return a;
}

}  // namespace

Json to_json(const SimpleGraph& g) {
  return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", pair_list(g.edges())}};
}

Json to_json(const Multigraph& h) {
  Json es = Json::array();
  for (const Edge& e : h.edges()) es.push_back({e.id, e.u, e.v});
  return Json{{"n", h.vertex_count()}, {"m", h.edge_count()}, {"edges", es}};
}

Json to_json(const ClawWitness& w) {
  return Json{{"center", w.center}, {"leaves", w.leaves}};
}

Json to_json(const NetWitness& w) { return Json{{"x", w.x}, {"y", w.y}}; }

Json to_json(const SubdividedClawWitness& w) {
  return Json{{"center", w.center}, {"inner", w.inner}, {"outer", w.outer}};
}

Json to_json(const FWitness& w) {
  Json cs = Json::array();
  for (const Connector& c : w.connectors)
    cs.push_back(Json{{"kind", c.kind == ConnectorKind::kPath ? "path" : "triangle"},
                      {"interior", c.interior}});
  return Json{{"a", w.a}, {"b", w.b}, {"connectors", cs}};
}

Json to_json(const ClosureTrace& t, bool with_steps) {
  Json j{{"steps", t.steps.size()}, {"edges_added", t.edges_added()},
         {"closure", to_json(t.final)}};
  if (with_steps) {
    Json steps = Json::array();
    for (const ClosureStep& s : t.steps)
      steps.push_back(Json{{"vertex", s.vertex}, {"added", pair_list(s.added)}});
    j["trace"] = steps;
  }
  return j;
}

Json to_json(const LineGraphRoot& r) {
  return Json{{"root", to_json(r.root)},
              {"vertex_to_edge", pair_list(r.vertex_to_edge)},
              {"cliques", r.cliques}};
}

Json to_json(const ClosedTrail& t) {
  return Json{{"vertices", t.vertices}, {"edges", t.edges}};
}

Json to_json(const HeavyMatching& m, const Multigraph& h) {
  Json es = Json::array();
  for (EdgeId id : m.edges) {
    const Edge& e = h.edge(id);
    es.push_back(Json{{"id", id}, {"u", e.u}, {"v", e.v}, {"edge_degree", edge_degree(h, id)}});
  }
  return Json{{"edges", es},
              {"threshold", std::to_string(m.threshold.num) + "/" +
                                std::to_string(m.threshold.den)}};
}

Json to_json(const Reduction& r) {
  Json log = Json::array();
  for (const ReductionStep& s : r.log)
    log.push_back(Json{{"certificate", to_string(s.certificate)},
                       {"contracted", s.contracted},
                       {"merged", s.merged},
                       {"before", to_json(s.before)}});
  return Json{{"reduced", to_json(r.reduced)}, {"log", log}};
}

Json to_json(const SubdividedClawCertificate& c) {
  Json arms = Json::array();
  for (const ArmCertificate& a : c.arms)
    arms.push_back(Json{{"x_prime", a.x_prime},
                        {"y_prime", a.y_prime},
                        {"edge_degree", a.edge_degree},
                        {"heavy", a.heavy},
                        {"x_location_ok", a.x_location_ok},
                        {"y_location_ok", a.y_location_ok},
                        {"boosted", a.boosted},
                        {"j_size", a.j_size},
                        {"boost_ok", a.boost_ok}});
  return Json{{"net_in_closure", to_json(c.net_in_closure)},
              {"net_in_g", to_json(c.net_in_g)},
              {"arms", arms},
              {"triangle_in_g", c.triangle_in_g},
              {"triangle_equivalence_ok", c.triangle_equivalence_ok}};
}

}  // namespace clawham
