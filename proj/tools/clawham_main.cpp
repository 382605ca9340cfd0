// clawham command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "clawham/clawham.h"

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphDeleter {
  void operator()(clawham_graph* g) const { clawham_graph_free(g); }
};
using GraphPtr = std::unique_ptr<clawham_graph, GraphDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { clawham_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int exit_code(clawham_status s) {
  switch (s) {
    case CLAWHAM_OK: return 0;
    case CLAWHAM_THEOREM_VIOLATION:
    case CLAWHAM_CLAIM_FAILED: return 2;
    case CLAWHAM_INCONCLUSIVE: return 3;
    default: return 1;
  }
}

void report_error(clawham_status s) {
  if (s == CLAWHAM_OK) return;
  const std::string msg = clawham_last_error();
  std::cerr << "clawham: " << (s == CLAWHAM_INTERNAL ? "internal error: " : "")
            << (msg.empty() ? "failed" : msg) << '\n';
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

clawham_format format_from(const std::string& name) {
  if (name == "graph6") return CLAWHAM_FORMAT_GRAPH6;
  if (name == "edgelist") return CLAWHAM_FORMAT_EDGELIST;
  return CLAWHAM_FORMAT_AUTO;
}

struct Common {
  std::string format = "auto";
  bool json = false;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::size_t limit = 0;
};

clawham_options options_from(const Common& c) {
  clawham_options o;
  clawham_options_default(&o);
  if (c.budget) o.budget = c.budget;
  o.seed = c.seed;
  o.limit = c.limit;
  return o;
}

// Parses the input graph; prints the error and returns nullptr on failure.
GraphPtr load_graph(const std::string& path, const Common& c, bool multigraph,
                    clawham_status& status) {
  const std::string text = read_input(path);
  clawham_graph* g = nullptr;
  status = clawham_graph_parse(text.c_str(), format_from(c.format), multigraph ? 1 : 0, &g);
  return GraphPtr(g);
}

std::string yes_no(const Json& v) { return v.is_boolean() && v.get<bool>() ? "yes" : "no"; }

void print_analysis_text(const Json& r) {
  std::cout << "id: " << r["id"].get<std::string>() << "  n=" << r["n"] << " m=" << r["m"] << '\n';
  std::cout << "claw_free: " << yes_no(r["claw_free"]);
  if (!r["claw"].is_null()) std::cout << " (claw centred at " << r["claw"]["center"] << ")";
  std::cout << "\ntwo_connected: " << yes_no(r["two_connected"]) << '\n';
  std::cout << "broersma_ok: " << yes_no(r["broersma_ok"]);
  if (r.contains("broersma_witness"))
    std::cout << " (endvertex " << r["broersma_witness"]["endvertex"] << " has degree "
              << r["broersma_witness"]["degree"] << ")";
  std::cout << "\nmin_degree_ok: " << yes_no(r["classical"]["min_degree_ok"])
            << "\nnet_free: " << yes_no(r["classical"]["net_free"]) << '\n';
  const Json& cl = r["closure"];
  if (cl.contains("skipped"))
    std::cout << "closure: skipped (" << cl["skipped"].get<std::string>() << ")\n";
  else
    std::cout << "closure: " << cl["steps"] << " steps, " << cl["edges_added"] << " edges added\n";
  const Json& root = r["root"];
  if (root.contains("skipped"))
    std::cout << "root: skipped (" << root["skipped"].get<std::string>() << ")\n";
  else
    std::cout << "root: " << root["vertices"] << " vertices, " << root["edges"] << " edges\n";
  const Json& dct = r["dct"];
  if (dct.contains("skipped"))
    std::cout << "dct: skipped (" << dct["skipped"].get<std::string>() << ")\n";
  else
    std::cout << "dct: " << dct["status"].get<std::string>() << '\n';
  std::cout << "hamiltonian: " << r["hamiltonian"]["status"].get<std::string>() << '\n';
  const Json& d = r["dichotomy"];
  if (d.contains("skipped"))
    std::cout << "dichotomy: skipped (" << d["skipped"].get<std::string>() << ")\n";
  else
    std::cout << "dichotomy: " << d["kind"].get<std::string>() << '\n';
  std::cout << "violation: " << yes_no(r["violation"]) << '\n';
}

int finish(clawham_status s, const CString& json, bool as_json,
           const std::function<void(const Json&)>& text) {
  if (json.p) {
    if (as_json)
      std::cout << json.str();
    else
      text(Json::parse(json.str()));
  }
  report_error(s);
  return exit_code(s);
}

std::uint64_t env_budget() {
  const char* v = std::getenv("CLAWHAM_BUDGET");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const unsigned long long b = std::strtoull(v, &end, 10);
  if (*end || b == 0) throw UsageError(std::string("CLAWHAM_BUDGET is not a positive integer: ") + v);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Claw-free graph hamiltonicity toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(clawham_version()));

  Common c;
  std::string input = "-";
  bool trace = false, reduce = false, timings = false;
  std::string id;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", input, "graph file, or - for stdin")->required();
    sub->add_option("--format", c.format, "input/output format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    sub->add_flag("--json", c.json, "JSON output");
    sub->add_option("--budget", c.budget, "search node budget (default $CLAWHAM_BUDGET or 10^7)");
    sub->add_option("--seed", c.seed, "seed for randomized parts");
    sub->add_option("--limit", c.limit, "truncate corpora");
  };

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  add_common(analyze, true);
  analyze->add_flag("--trace", trace, "include closure steps and the root");
  analyze->add_flag("--timings", timings, "per-stage wall clock");
  analyze->add_option("--id", id, "identifier echoed in the report");

  auto* closure = app.add_subcommand("closure", "closure of a claw-free graph");
  add_common(closure, true);
  closure->add_flag("--trace", trace, "include the completion steps");

  auto* root = app.add_subcommand("root", "triangle-free root of the closure");
  add_common(root, true);

  auto* dct = app.add_subcommand("dct", "dominating closed trail of a multigraph");
  add_common(dct, true);
  dct->add_flag("--reduce", reduce, "contract collapsible certificates first");

  std::string claim;
  unsigned threads = 1;
  std::string counterexample = "clawham-counterexample.txt";
  auto* verify = app.add_subcommand("verify", "replay a claim over a corpus");
  add_common(verify, true);
  verify->add_option("--claim", claim, "claim to check")->required();
  verify->add_option("--threads", threads, "worker threads");
  verify->add_option("--counterexample", counterexample, "where a failing instance is written");

  std::string family, spec, name, strategy = "line";
  int m = 3, size = 0, n = 0;
  auto* gen = app.add_subcommand("gen", "emit a graph from a named family");
  add_common(gen, false);
  gen->add_option("family", family, "sharpness, f, named or random")
      ->required()
      ->check(CLI::IsMember({"sharpness", "f", "named", "random"}));
  gen->add_option("--m", m, "clique order for sharpness");
  gen->add_option("--spec", spec, "connectors for f, e.g. p2,p3,t");
  gen->add_option("--name", name, "named graph");
  gen->add_option("--size", size, "order for cycle, path, complete");
  gen->add_option("--n", n, "order for random");
  gen->add_option("--strategy", strategy, "line or thinned")
      ->check(CLI::IsMember({"line", "thinned"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (!c.budget) c.budget = env_budget();
    clawham_options o = options_from(c);
    o.with_trace = trace;
    o.reduce = reduce;
    o.timings = timings;
    clawham_status s = CLAWHAM_OK;
    CString json;

    if (*gen) {
      clawham_graph* raw = nullptr;
      if (family == "sharpness")
        s = clawham_generate("sharpness", nullptr, m, c.seed, &raw);
      else if (family == "f")
        s = clawham_generate("f", spec.c_str(), 0, c.seed, &raw);
      else if (family == "named")
        s = clawham_generate("named", name.c_str(), size, c.seed, &raw);
      else
        s = clawham_generate("random", strategy.c_str(), n, c.seed, &raw);
      GraphPtr g(raw);
      if (s == CLAWHAM_OK) {
        CString out;
        s = clawham_graph_serialize(
            g.get(), c.format == "edgelist" ? CLAWHAM_FORMAT_EDGELIST : CLAWHAM_FORMAT_GRAPH6,
            &out.p);
        if (s == CLAWHAM_OK) std::cout << out.str();
      }
      report_error(s);
      return exit_code(s);
    }

    if (*verify) {
      o.threads = threads;
      o.counterexample_path = counterexample.c_str();
      s = clawham_verify(input.c_str(), claim.c_str(), &o, &json.p);
      const int rc = finish(s, json, c.json, [&](const Json& r) {
        std::cout << "claim " << r["claim"].get<std::string>() << ": " << r["instances"]
                  << " instances, " << r["pass"] << " pass, " << r["vacuous"] << " vacuous, "
                  << r["fail"] << " fail, " << r["inconclusive"] << " inconclusive\n";
        if (r.contains("counterexample"))
          std::cout << "smallest counterexample: index " << r["counterexample"]["index"] << " ("
                    << r["counterexample"]["detail"].get<std::string>() << "), written to "
                    << counterexample << '\n';
      });
      if (s == CLAWHAM_CLAIM_FAILED && json.p) {
        const Json r = Json::parse(json.str());
        std::cerr << "self-audit before trusting this failure:\n";
        for (const auto& item : r["self_audit"]) std::cerr << "  - " << item.get<std::string>() << '\n';
      }
      return rc;
    }

    GraphPtr g = load_graph(input, c, dct->parsed(), s);
    if (s != CLAWHAM_OK) {
      report_error(s);
      return exit_code(s);
    }

    if (*analyze) {
      s = clawham_analyze(g.get(), id.empty() ? (input == "-" ? "stdin" : input.c_str()) : id.c_str(),
                          &o, &json.p);
      return finish(s, json, c.json, print_analysis_text);
    }
    if (*closure) {
      clawham_graph* closed_raw = nullptr;
      s = clawham_closure(g.get(), &o, &json.p, &closed_raw);
      GraphPtr closed(closed_raw);
      return finish(s, json, c.json, [&](const Json&) {
        CString out;
        if (clawham_graph_serialize(closed.get(),
                                    c.format == "edgelist" ? CLAWHAM_FORMAT_EDGELIST
                                                           : CLAWHAM_FORMAT_GRAPH6,
                                    &out.p) == CLAWHAM_OK)
          std::cout << out.str();
      });
    }
    if (*root) {
      clawham_graph* root_raw = nullptr;
      s = clawham_root(g.get(), &o, &json.p, &root_raw);
      GraphPtr rg(root_raw);
      return finish(s, json, c.json, [&](const Json&) {
        CString out;
        if (clawham_graph_serialize(rg.get(),
                                    c.format == "graph6" ? CLAWHAM_FORMAT_GRAPH6
                                                         : CLAWHAM_FORMAT_EDGELIST,
                                    &out.p) == CLAWHAM_OK)
          std::cout << out.str();
      });
    }
    if (*dct) {
      s = clawham_dct(g.get(), &o, &json.p);
      return finish(s, json, c.json, [&](const Json& r) {
        std::cout << "dct: " << r["status"].get<std::string>() << '\n';
        if (!r["dct"].is_null()) {
          std::cout << "vertices:";
          for (const auto& v : r["dct"]["vertices"]) std::cout << ' ' << v;
          std::cout << "\nedges:";
          for (const auto& e : r["dct"]["edges"]) std::cout << ' ' << e;
          std::cout << '\n';
        }
      });
    }
  } catch (const UsageError& e) {
    std::cerr << "clawham: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "clawham: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
