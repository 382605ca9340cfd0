#include "clawham/clawham.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "clawham/analysis.hpp"
#include "clawham/generators.hpp"
#include "clawham/harness.hpp"
#include "clawham/io.hpp"
#include "clawham/report.hpp"

struct clawham_graph {
  clawham::Multigraph h;
};

namespace {

using namespace clawham;

thread_local std::string g_last_error;

clawham_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::kInvalidInput: return CLAWHAM_INVALID_INPUT;
    case ErrorCode::kPrecondition: return CLAWHAM_PRECONDITION;
    case ErrorCode::kInconclusive: return CLAWHAM_INCONCLUSIVE;
    case ErrorCode::kTheoremViolation: return CLAWHAM_THEOREM_VIOLATION;
    case ErrorCode::kInternal: return CLAWHAM_INTERNAL;
  }
  return CLAWHAM_INTERNAL;
}

template <class F>
clawham_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CLAWHAM_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CLAWHAM_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put_json(char** out, const Json& j) {
  if (out) *out = dup(j.dump(2) + "\n");
}

clawham_options resolved(const clawham_options* opts) {
  clawham_options o;
  clawham_options_default(&o);
  return opts ? *opts : o;
}

SimpleGraph simple_of(const clawham_graph* g) {
  require(g != nullptr, ErrorCode::kInvalidInput, "null graph handle");
  SimpleGraph s(g->h.vertex_count());
  for (const Edge& e : g->h.edges())
    require(s.add_edge(e.u, e.v), ErrorCode::kInvalidInput,
            "graph has parallel edges; this operation needs a simple graph");
  return s;
}

clawham_graph* wrap(Multigraph h) { return new clawham_graph{std::move(h)}; }

GraphFormat format_of(clawham_format f) {
  switch (f) {
    case CLAWHAM_FORMAT_GRAPH6: return GraphFormat::kGraph6;
    case CLAWHAM_FORMAT_EDGELIST: return GraphFormat::kEdgeList;
    default: return GraphFormat::kAuto;
  }
}

}  // namespace

extern "C" {

void clawham_options_default(clawham_options* opts) {
  if (!opts) return;
  *opts = clawham_options{};
  opts->budget = clawham::kDefaultBudget;
  opts->threads = 1;
}

const char* clawham_version(void) { return "1.0.0"; }

const char* clawham_last_error(void) { return g_last_error.c_str(); }

void clawham_string_free(char* s) { std::free(s); }

clawham_status clawham_graph_parse(const char* text, clawham_format format, int multigraph,
                                   clawham_graph** out) {
  return guarded([&] {
    require(text && out, ErrorCode::kInvalidInput, "null argument");
    GraphFormat f = format_of(format);
    if (multigraph && f != GraphFormat::kGraph6) {
      std::string_view t(text);
      const auto first = t.find_first_not_of(" \t\r\n");
      const auto eol = t.find('\n', first == std::string_view::npos ? 0 : first);
      const std::string_view line =
          first == std::string_view::npos ? "" : t.substr(first, eol == t.npos ? t.npos : eol - first);
      const bool edge_list = f == GraphFormat::kEdgeList || line.starts_with("#") ||
                             line.find_first_of(" \t") != std::string_view::npos;
      if (edge_list) {
        *out = wrap(parse_multigraph_edge_list(text));
        return CLAWHAM_OK;
      }
      f = GraphFormat::kGraph6;
    }
    *out = wrap(Multigraph::from_simple(parse_graph(text, f)));
    return CLAWHAM_OK;
  });
}

clawham_status clawham_graph_from_edges(int n, const int* pairs, size_t m, clawham_graph** out) {
  return guarded([&] {
    require(out && (pairs || m == 0) && n >= 0, ErrorCode::kInvalidInput, "bad arguments");
    Multigraph h(n);
    for (size_t i = 0; i < m; ++i) {
      const int u = pairs[2 * i], v = pairs[2 * i + 1];
      require(u >= 0 && v >= 0 && u < n && v < n && u != v, ErrorCode::kInvalidInput,
              "edge " + std::to_string(i) + " is a loop or out of range");
      h.add_edge(u, v);
    }
    *out = wrap(std::move(h));
    return CLAWHAM_OK;
  });
}

void clawham_graph_free(clawham_graph* g) { delete g; }

int clawham_graph_vertex_count(const clawham_graph* g) { return g ? g->h.vertex_count() : -1; }

int clawham_graph_edge_count(const clawham_graph* g) { return g ? g->h.edge_count() : -1; }

clawham_status clawham_graph_serialize(const clawham_graph* g, clawham_format format, char** out) {
  return guarded([&] {
    require(g && out, ErrorCode::kInvalidInput, "null argument");
    if (format == CLAWHAM_FORMAT_EDGELIST)
      *out = dup(to_edge_list(g->h));
    else
      *out = dup(to_graph6(simple_of(g)) + "\n");
    return CLAWHAM_OK;
  });
}

clawham_status clawham_generate(const char* family, const char* arg, int size, uint64_t seed,
                                clawham_graph** out) {
  return guarded([&] {
    require(family && out, ErrorCode::kInvalidInput, "null argument");
    const std::string fam(family);
    const std::string a = arg ? arg : "";
    SimpleGraph g;
    if (fam == "sharpness") {
      g = sharpness_graph(size);
    } else if (fam == "f") {
      g = brousek_F(parse_fspec(a)).graph;
    } else if (fam == "named") {
      g = named_small(a, size);
    } else if (fam == "random") {
      require(a.empty() || a == "line" || a == "thinned", ErrorCode::kInvalidInput,
              "random strategy must be 'line' or 'thinned'");
      require(size >= 1, ErrorCode::kInvalidInput, "random needs n >= 1");
      g = random_claw_free(size, seed,
                           a == "thinned" ? RandomStrategy::kLineGraphThinned
                                          : RandomStrategy::kLineGraph);
    } else {
      fail(ErrorCode::kInvalidInput,
           "unknown family '" + fam + "' (expected sharpness, f, named or random)");
    }
    *out = wrap(Multigraph::from_simple(g));
    return CLAWHAM_OK;
  });
}

clawham_status clawham_analyze(const clawham_graph* g, const char* id, const clawham_options* opts,
                               char** json) {
  return guarded([&] {
    const clawham_options o = resolved(opts);
    AnalysisOptions ao;
    ao.id = id ? id : "input";
    ao.budget = o.budget;
    ao.with_trace = o.with_trace != 0;
    ao.timings = o.timings != 0;
    const Analysis a = analyze(simple_of(g), ao);
    put_json(json, a.report);
    if (a.violation) {
      g_last_error = "hypotheses hold but the graph is not hamiltonian";
      return CLAWHAM_THEOREM_VIOLATION;
    }
    if (a.inconclusive) {
      g_last_error = "a search ran out of budget";
      return CLAWHAM_INCONCLUSIVE;
    }
    return CLAWHAM_OK;
  });
}

clawham_status clawham_closure(const clawham_graph* g, const clawham_options* opts, char** json,
                               clawham_graph** closed) {
  return guarded([&] {
    const clawham_options o = resolved(opts);
    const SimpleGraph s = simple_of(g);
    const ClosureTrace t = compute_closure(s);
    Json j{{"schema", kSchema}, {"n", s.vertex_count()}, {"m", s.edge_count()}};
    j["closure"] = to_json(t, o.with_trace != 0);
    j["closed_graph6"] = to_graph6(t.final);
    put_json(json, j);
    if (closed) *closed = wrap(Multigraph::from_simple(t.final));
    return CLAWHAM_OK;
  });
}

clawham_status clawham_root(const clawham_graph* g, const clawham_options* opts, char** json,
                            clawham_graph** root) {
  return guarded([&] {
    (void)resolved(opts);
    const SimpleGraph s = simple_of(g);
    const ClosureTrace t = compute_closure(s);
    const LineGraphRoot r = root_of_line_graph(t.final);
    require(verify_root(t.final, r), ErrorCode::kInternal, "root failed verification");
    Json j{{"schema", kSchema},
           {"n", s.vertex_count()},
           {"m", s.edge_count()},
           {"closure_steps", t.steps.size()},
           {"root", to_json(r)}};
    put_json(json, j);
    if (root) *root = wrap(Multigraph::from_simple(r.root));
    return CLAWHAM_OK;
  });
}

clawham_status clawham_dct(const clawham_graph* h, const clawham_options* opts, char** json) {
  return guarded([&] {
    require(h != nullptr, ErrorCode::kInvalidInput, "null graph handle");
    const clawham_options o = resolved(opts);
    const TrailSearchOptions search{o.budget};
    Json j{{"schema", kSchema}, {"n", h->h.vertex_count()}, {"m", h->h.edge_count()}};
    SearchResult<ClosedTrail> result;
    if (o.reduce) {
      const Reduction red = reduce_by_certificates(h->h);
      const std::vector<Vertex> merged = merged_vertices(red);
      j["reduction"] = to_json(red);
      j["merged"] = merged;
      const auto reduced = find_dct_containing(red.reduced, merged, search);
      j["reduced_dct"] = reduced.witness ? to_json(*reduced.witness) : Json(nullptr);
      result.status = reduced.status;
      result.nodes = reduced.nodes;
      if (reduced.found()) {
        result.witness = lift_through_reduction(red, *reduced.witness);
        require(is_dct(h->h, *result.witness), ErrorCode::kInternal,
                "lifted trail is not a DCT");
      }
    } else {
      result = find_dct(h->h, search);
    }
    j["status"] = to_string(result.status);
    j["dct"] = result.witness ? to_json(*result.witness) : Json(nullptr);
    put_json(json, j);
    if (result.inconclusive()) {
      g_last_error = "DCT search ran out of budget";
      return CLAWHAM_INCONCLUSIVE;
    }
    return CLAWHAM_OK;
  });
}

clawham_status clawham_verify(const char* corpus, const char* claim, const clawham_options* opts,
                              char** json) {
  return guarded([&] {
    require(corpus && claim, ErrorCode::kInvalidInput, "null argument");
    const clawham_options o = resolved(opts);
    const Claim c = parse_claim(claim);
    const auto graphs = load_corpus(corpus, o.limit, o.seed);
    VerifyOptions vo;
    vo.claim = {o.budget, o.seed};
    vo.threads = o.threads;
    if (o.counterexample_path) vo.counterexample_path = o.counterexample_path;
    const VerifySummary s = verify_corpus(c, graphs, vo);
    Json j = to_json(s);
    j["corpus"] = corpus;
    put_json(json, j);
    switch (s.exit_code()) {
      case 2:
        g_last_error = "claim failed: " + s.counterexample_detail;
        return CLAWHAM_CLAIM_FAILED;
      case 3:
        g_last_error = "some instances were inconclusive";
        return CLAWHAM_INCONCLUSIVE;
      default:
        return CLAWHAM_OK;
    }
  });
}

}  // extern "C"
