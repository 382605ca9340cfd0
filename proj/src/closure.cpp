#include "clawham/closure.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace clawham {

SimpleGraph ClosureTrace::graph_at(std::size_t i) const {
  require(i <= steps.size(), ErrorCode::kInvalidInput, "trace index out of range");
  SimpleGraph g = initial;
  for (std::size_t s = 0; s < i; ++s)
    for (auto [u, v] : steps[s].added) g.add_edge(u, v);
  return g;
}

std::size_t ClosureTrace::edges_added() const {
  std::size_t total = 0;
  for (const auto& s : steps) total += s.added.size();
  return total;
}

void validate_trace(const ClosureTrace& trace) {
  SimpleGraph g = trace.initial;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    const std::string where = "trace step " + std::to_string(i) + ": ";
    g.check_vertex(step.vertex);
    require(is_locally_connected(g, step.vertex) &&
                !neighborhood_is_clique(g, step.vertex),
            ErrorCode::kInvalidInput, where + "vertex not eligible");
    SimpleGraph next = local_completion(g, step.vertex);
    std::vector<VertexPair> expected;
    for (auto e : next.edges())
      if (!g.has_edge(e.first, e.second)) expected.push_back(e);
    require(expected == step.added, ErrorCode::kInvalidInput,
            where + "added edges differ from the local completion");
    g = std::move(next);
  }
  require(g == trace.final, ErrorCode::kInvalidInput,
          "replaying the trace does not give the final graph");
  require(classify_locality(g).el.empty(), ErrorCode::kInvalidInput,
          "final graph still has an eligible vertex");
}

SimpleGraph local_completion(const SimpleGraph& g, Vertex x) {
  g.check_vertex(x);
  require(is_locally_connected(g, x), ErrorCode::kPrecondition,
          "local completion at locally disconnected vertex " + std::to_string(x));
  SimpleGraph out = g;
  const auto nb = g.neighbors(x);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) out.add_edge(nb[i], nb[j]);
  return out;
}

ClosureTrace compute_closure(const SimpleGraph& g, const ClosureOptions& opts) {
  if (auto claw = find_claw(g))
    fail(ErrorCode::kPrecondition,
         "closure needs a claw-free graph; claw centred at " +
             std::to_string(claw->center));
  ClosureTrace trace;
  trace.initial = g;
  SimpleGraph cur = g;
  std::mt19937_64 rng(opts.seed);
  for (;;) {
    const auto el = classify_locality(cur).el;
    if (el.empty()) break;
    Vertex x = el.front();
    if (opts.order == ClosureOrder::kHighestFirst) {
      x = el.back();
    } else if (opts.order == ClosureOrder::kSeeded) {
      std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
      x = el[pick(rng)];
    }
    SimpleGraph next = local_completion(cur, x);
    ClosureStep step{x, {}};
    for (auto e : next.edges())
      if (!cur.has_edge(e.first, e.second)) step.added.push_back(e);
    trace.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  trace.final = std::move(cur);
  return trace;
}

std::vector<Vertex> clique_containing(const SimpleGraph& g,
                                      std::span<const Vertex> seed_vertices) {
  require(!seed_vertices.empty(), ErrorCode::kInvalidInput, "empty clique seed");
  std::vector<Vertex> clique(seed_vertices.begin(), seed_vertices.end());
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      require(g.has_edge(clique[i], clique[j]), ErrorCode::kPrecondition,
              "clique seed is not complete");
  std::vector<Vertex> common;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
    bool all = std::all_of(clique.begin(), clique.end(),
                           [&](Vertex s) { return g.has_edge(s, v); });
    if (all) common.push_back(v);
  }
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j)
      require(g.has_edge(common[i], common[j]), ErrorCode::kPrecondition,
              "seed lies in more than one maximal clique");
  clique.insert(clique.end(), common.begin(), common.end());
  std::sort(clique.begin(), clique.end());
  return clique;
}

NetCliques net_cliques(const SimpleGraph& closed, const NetWitness& net) {
  NetCliques out;
  out.r0 = clique_containing(closed, net.x);
  for (int j = 0; j < 3; ++j) {
    std::array<Vertex, 2> seed{net.x[j], net.y[j]};
    out.r[j] = clique_containing(closed, seed);
  }
  return out;
}

namespace {

bool is_maximal_clique_with(const SimpleGraph& g, const std::vector<Vertex>& c,
                            std::span<const Vertex> must_contain) {
  for (Vertex v : must_contain)
    if (std::find(c.begin(), c.end(), v) == c.end()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.has_edge(c[i], c[j])) return false;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::find(c.begin(), c.end(), v) != c.end()) continue;
    if (std::all_of(c.begin(), c.end(), [&](Vertex u) { return g.has_edge(u, v); }))
      return false;
  }
  return true;
}

}  // namespace

NetWitness backtrace_net(const ClosureTrace& trace, const NetWitness& net,
                         const NetCliques& cliques) {
  const SimpleGraph& closed = trace.final;
  require(is_induced_net(closed, net), ErrorCode::kPrecondition,
          "backtrace_net: not an induced net of the closure");
  require(is_maximal_clique_with(closed, cliques.r0, net.x),
          ErrorCode::kPrecondition,
          "backtrace_net: R0 is not the clique of the triangle x1x2x3");
  for (int j = 0; j < 3; ++j) {
    std::array<Vertex, 2> e{net.x[j], net.y[j]};
    require(is_maximal_clique_with(closed, cliques.r[j], e),
            ErrorCode::kPrecondition,
            "backtrace_net: R" + std::to_string(j + 1) +
                " is not the clique of edge x_j y_j");
  }

  NetWitness cur = net;
  SimpleGraph g = closed;
  for (std::size_t i = trace.steps.size(); i-- > 0;) {
    const auto& step = trace.steps[i];
    for (auto [u, v] : step.added) g.remove_edge(u, v);
    // g is now G^{i}, the graph before this step; collect the net edges it lacks.
    std::vector<int> missing_pendant;
    std::vector<std::pair<int, int>> missing_triangle;
    for (int j = 0; j < 3; ++j) {
      if (!g.has_edge(cur.x[j], cur.y[j])) missing_pendant.push_back(j);
      for (int k = j + 1; k < 3; ++k)
        if (!g.has_edge(cur.x[j], cur.x[k])) missing_triangle.push_back({j, k});
    }
    if (missing_pendant.empty() && missing_triangle.empty()) continue;
    const Vertex u = step.vertex;
    if (missing_pendant.size() == 1 && missing_triangle.empty()) {
      cur.y[missing_pendant[0]] = u;
    } else if (missing_pendant.empty() && missing_triangle.size() == 2) {
      // The vertex shared by both missing triangle edges is replaced by u and
      // becomes its own endvertex.
      const auto [a, b] = missing_triangle[0];
      const auto [c, d] = missing_triangle[1];
      const int k = (a == c || a == d) ? a : b;
      cur.y[k] = cur.x[k];
      cur.x[k] = u;
    } else {
      fail(ErrorCode::kInternal,
           "backtrace_net: completion step added an impossible edge pattern "
           "(input not claw-free?)");
    }
    if (!is_induced_net(g, cur))
      fail(ErrorCode::kInternal,
           "backtrace_net: substituted vertices do not induce a net");
  }
  return cur;
}

}  // namespace clawham
