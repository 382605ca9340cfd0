#include "clawham/analysis.hpp"

#include <chrono>
#include <optional>

namespace clawham {

namespace {

class StageClock {
 public:
  explicit StageClock(bool on) : on_(on) {}

  template <class F>
  auto run(const char* stage, F&& f) {
    if (!on_) return f();
    const auto t0 = std::chrono::steady_clock::now();
    auto out = f();
    const auto dt = std::chrono::steady_clock::now() - t0;
    times_[stage] = std::chrono::duration<double, std::milli>(dt).count();
    return out;
  }

  const Json& times() const { return times_; }

 private:
  bool on_;
  Json times_ = Json::object();
};

Json skipped(const std::string& reason) { return Json{{"skipped", reason}}; }

}  // namespace

Analysis analyze(const SimpleGraph& g, const AnalysisOptions& opts) {
  Analysis out;
  Json& r = out.report;
  StageClock clock(opts.timings);
  const TrailSearchOptions search{opts.budget};

  r["schema"] = kSchema;
  r["id"] = opts.id;
  r["n"] = g.vertex_count();
  r["m"] = g.edge_count();

  const auto claw = clock.run("detect", [&] { return find_claw(g); });
  r["claw_free"] = !claw.has_value();
  r["claw"] = claw ? to_json(*claw) : Json(nullptr);

  const bool two_connected = is_2_connected(g);
  r["two_connected"] = two_connected;

  const BroersmaResult broersma = clock.run("conditions", [&] { return broersma_condition(g); });
  r["broersma_ok"] = broersma.ok;
  if (!broersma.ok)
    r["broersma_witness"] = Json{{"net", to_json(*broersma.net)},
                                 {"endvertex", *broersma.endvertex},
                                 {"degree", g.degree(*broersma.endvertex)}};
  const ClassicalConditions classical = classical_conditions(g);
  r["classical"] = Json{{"min_degree_ok", classical.min_degree_ok},
                        {"net_free", classical.net_free}};

  std::optional<ClosureTrace> trace;
  if (claw) {
    r["closure"] = skipped("input has an induced claw");
  } else {
    trace = clock.run("closure", [&] { return compute_closure(g); });
    r["closure"] = to_json(*trace, opts.with_trace);
  }

  std::optional<LineGraphRoot> root;
  if (!trace) {
    r["root"] = skipped("no closure");
  } else {
    try {
      root = clock.run("root", [&] { return root_of_line_graph(trace->final); });
      r["root"] = Json{{"vertices", root->root.vertex_count()},
                       {"edges", root->root.edge_count()},
                       {"triangle_free", is_triangle_free(root->root)},
                       {"verified", verify_root(trace->final, *root)}};
      if (opts.with_trace) r["root"]["graph"] = to_json(root->root);
    } catch (const Error& e) {
      r["root"] = skipped(e.what());
    }
  }

  if (!root) {
    r["dct"] = skipped("no root");
  } else {
    const auto dct = clock.run("trails", [&] { return find_dct(root->as_multigraph(), search); });
    r["dct"] = Json{{"status", to_string(dct.status)},
                    {"trail", dct.witness ? to_json(*dct.witness) : Json(nullptr)}};
    if (dct.inconclusive()) out.inconclusive = true;
  }

  const auto cycle = clock.run("hamiltonian", [&] { return hamiltonian_cycle(g, search); });
  if (cycle.found())
    require(is_hamiltonian_cycle(g, *cycle.witness), ErrorCode::kInternal,
            "hamiltonian cycle witness failed verification");
  r["hamiltonian"] = Json{
      {"status", cycle.found() ? "yes" : cycle.absent() ? "no" : "inconclusive"},
      {"cycle", cycle.witness ? Json(*cycle.witness) : Json(nullptr)}};
  if (cycle.inconclusive()) out.inconclusive = true;

  const bool hypotheses = !claw && two_connected && broersma.ok;
  r["hypotheses"] = hypotheses;
  if (!hypotheses || !root) {
    r["dichotomy"] = skipped(hypotheses ? "no root" : "hypotheses do not hold");
  } else {
    const DichotomyResult d =
        clock.run("dichotomy", [&] { return main_dichotomy_check(root->root, search); });
    // The check numbers root edges in edges() order; report them as the
    // vertices of G they stand for, like the dct field does.
    const auto root_edges = root->root.edges();
    auto as_vertex = [&](EdgeId e) { return *root->vertex_for(root_edges[e].first, root_edges[e].second); };
    Json dj{{"kind", to_string(d.kind)}};
    if (d.trail) {
      ClosedTrail t = *d.trail;
      for (EdgeId& e : t.edges) e = as_vertex(e);
      dj["trail"] = to_json(t);
    }
    if (d.matching) {
      HeavyMatching m = *d.matching;
      for (EdgeId& e : m.edges) e = as_vertex(e);
      dj["matching"] = to_json(m, root->as_multigraph());
      dj["size_bound_ok"] = d.size_bound_ok;
    }
    r["dichotomy"] = dj;
    if (d.kind == DichotomyKind::kInconclusive) out.inconclusive = true;
  }

  out.violation = hypotheses && cycle.absent();
  r["violation"] = out.violation;
  if (opts.timings) r["timings_ms"] = clock.times();
  return out;
}

}  // namespace clawham
