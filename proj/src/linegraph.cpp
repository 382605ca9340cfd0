#include "clawham/linegraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace clawham {

LineGraph line_graph(const SimpleGraph& h) {
  LineGraph out;
  out.edge_of = h.edges();
  const int m = static_cast<int>(out.edge_of.size());
  out.graph = SimpleGraph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = out.edge_of[i];
      auto [c, d] = out.edge_of[j];
      if (a == c || a == d || b == c || b == d) out.graph.add_edge(i, j);
    }
  return out;
}

Multigraph LineGraphRoot::as_multigraph() const {
  Multigraph h(root.vertex_count());
  for (std::size_t v = 0; v < vertex_to_edge.size(); ++v)
    h.add_edge_with_id(static_cast<EdgeId>(v), vertex_to_edge[v].first,
                       vertex_to_edge[v].second);
  return h;
}

std::optional<Vertex> LineGraphRoot::vertex_for(Vertex a, Vertex b) const {
  const VertexPair key{std::min(a, b), std::max(a, b)};
  for (std::size_t v = 0; v < vertex_to_edge.size(); ++v)
    if (vertex_to_edge[v] == key) return static_cast<Vertex>(v);
  return std::nullopt;
}

std::vector<std::vector<Vertex>> maximal_cliques(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.vertex_count();
  std::vector<Vertex> r;
  std::function<void(std::vector<Vertex>, std::vector<Vertex>)> bk =
      [&](std::vector<Vertex> p, std::vector<Vertex> x) {
        if (p.empty() && x.empty()) {
          auto c = r;
          std::sort(c.begin(), c.end());
          out.push_back(std::move(c));
          return;
        }
        // Pivot maximising |P ∩ N(u)|.
        Vertex pivot = -1;
        int best = -1;
        for (const auto* set : {&p, &x})
          for (Vertex u : *set) {
            int cnt = 0;
            for (Vertex v : p) cnt += g.has_edge(u, v);
            if (cnt > best) {
              best = cnt;
              pivot = u;
            }
          }
        std::vector<Vertex> candidates;
        for (Vertex v : p)
          if (!g.has_edge(pivot, v)) candidates.push_back(v);
        for (Vertex v : candidates) {
          std::vector<Vertex> np, nx;
          for (Vertex w : p)
            if (g.has_edge(v, w)) np.push_back(w);
          for (Vertex w : x)
            if (g.has_edge(v, w)) nx.push_back(w);
          r.push_back(v);
          bk(std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  if (n > 0) bk(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

LineGraphRoot root_of_line_graph(const SimpleGraph& g) {
  const int n = g.vertex_count();
  require(n >= 1, ErrorCode::kInvalidInput, "root of the empty graph");
  require(is_connected(g), ErrorCode::kInvalidInput,
          "root extraction needs a connected graph");

  LineGraphRoot out;
  out.cliques = maximal_cliques(g);
  const int k = static_cast<int>(out.cliques.size());

  std::vector<std::vector<int>> membership(n);
  for (int c = 0; c < k; ++c)
    for (Vertex v : out.cliques[c]) membership[v].push_back(c);
  for (Vertex v = 0; v < n; ++v)
    if (membership[v].size() > 2)
      fail(ErrorCode::kInvalidInput,
           "vertex " + std::to_string(v) + " lies in " +
               std::to_string(membership[v].size()) +
               " maximal cliques; not the line graph of a triangle-free graph");
  for (int c = 0; c < k; ++c)
    for (int d = c + 1; d < k; ++d) {
      std::vector<Vertex> shared;
      std::set_intersection(out.cliques[c].begin(), out.cliques[c].end(),
                            out.cliques[d].begin(), out.cliques[d].end(),
                            std::back_inserter(shared));
      if (shared.size() > 1)
        fail(ErrorCode::kInvalidInput,
             "maximal cliques " + std::to_string(c) + " and " +
                 std::to_string(d) + " share " + std::to_string(shared.size()) +
                 " vertices (clique-intersection violation)");
    }

  int pendants = 0;
  for (Vertex v = 0; v < n; ++v)
    if (membership[v].size() == 1) ++pendants;
  out.root = SimpleGraph(k + pendants);
  out.vertex_to_edge.resize(n);
  int next_pendant = k;
  for (Vertex v = 0; v < n; ++v) {
    const auto& mem = membership[v];
    VertexPair e = mem.size() == 2 ? VertexPair{mem[0], mem[1]}
                                   : VertexPair{mem[0], next_pendant++};
    out.root.add_edge(e.first, e.second);
    out.vertex_to_edge[v] = e;
  }

  if (!is_triangle_free(out.root))
    fail(ErrorCode::kInvalidInput,
         "Krausz root has a triangle; not the line graph of a triangle-free graph");
  if (!verify_root(g, out))
    fail(ErrorCode::kInvalidInput,
         "maximal cliques do not form a Krausz partition");
  return out;
}

bool verify_root(const SimpleGraph& g, const LineGraphRoot& root) {
  const int n = g.vertex_count();
  if (static_cast<int>(root.vertex_to_edge.size()) != n) return false;
  if (root.root.edge_count() != n) return false;
  std::set<VertexPair> seen;
  for (auto [a, b] : root.vertex_to_edge) {
    if (a < 0 || b < 0 || a >= root.root.vertex_count() ||
        b >= root.root.vertex_count() || a == b)
      return false;
    if (!root.root.has_edge(a, b)) return false;
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = v + 1; w < n; ++w) {
      auto [a, b] = root.vertex_to_edge[v];
      auto [c, d] = root.vertex_to_edge[w];
      bool share = a == c || a == d || b == c || b == d;
      if (share != g.has_edge(v, w)) return false;
    }
  return true;
}

}  // namespace clawham
