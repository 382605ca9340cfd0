#include "clawham/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace clawham {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "invalid input";
    case ErrorCode::kPrecondition: return "precondition violated";
    case ErrorCode::kInconclusive: return "inconclusive";
    case ErrorCode::kTheoremViolation: return "theorem violation";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown error";
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int vertex_count) : n_(vertex_count) {
  require(vertex_count >= 0, ErrorCode::kInvalidInput,
          "negative vertex count");
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  degree_.assign(n_, 0);
}

SimpleGraph SimpleGraph::from_edges(int vertex_count,
                                    std::span<const VertexPair> edges) {
  SimpleGraph g(vertex_count);
  for (auto [u, v] : edges) {
    if (!g.add_edge(u, v))
      fail(ErrorCode::kInvalidInput, "parallel edge " + std::to_string(u) +
                                         "-" + std::to_string(v));
  }
  return g;
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    fail(ErrorCode::kInvalidInput, "vertex " + std::to_string(v) +
                                       " out of range [0," +
                                       std::to_string(n_) + ")");
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

int SimpleGraph::degree(Vertex v) const {
  check_vertex(v);
  return degree_[v];
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  require(u != v, ErrorCode::kInvalidInput,
          "loop at vertex " + std::to_string(u));
  auto& a = adj_[static_cast<std::size_t>(u) * n_ + v];
  if (a) return false;
  a = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  ++degree_[u];
  ++degree_[v];
  ++m_;
  return true;
}

bool SimpleGraph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) return false;
  adj_[static_cast<std::size_t>(u) * n_ + v] = 0;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 0;
  --degree_[u];
  --degree_[v];
  --m_;
  return true;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  const auto* row = adj_.data() + static_cast<std::size_t>(v) * n_;
  for (Vertex w = 0; w < n_; ++w)
    if (row[w]) out.push_back(w);
  return out;
}

std::vector<VertexPair> SimpleGraph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// Multigraph

Multigraph::Multigraph(int vertex_count) : n_(vertex_count) {
  require(vertex_count >= 0, ErrorCode::kInvalidInput,
          "negative vertex count");
  degree_.assign(n_, 0);
}

Multigraph Multigraph::from_simple(const SimpleGraph& g) {
  Multigraph h(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  return h;
}

void Multigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    fail(ErrorCode::kInvalidInput, "vertex " + std::to_string(v) +
                                       " out of range [0," +
                                       std::to_string(n_) + ")");
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v) {
  EdgeId id = next_id_;
  add_edge_with_id(id, u, v);
  return id;
}

void Multigraph::add_edge_with_id(EdgeId id, Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  require(u != v, ErrorCode::kInvalidInput,
          "loop at vertex " + std::to_string(u));
  require(id >= 0 && !has_edge_id(id), ErrorCode::kInvalidInput,
          "edge id " + std::to_string(id) + " already in use");
  auto pos = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  edges_.insert(pos, Edge{id, std::min(u, v), std::max(u, v)});
  ++degree_[u];
  ++degree_[v];
  next_id_ = std::max(next_id_, id + 1);
}

bool Multigraph::has_edge_id(EdgeId id) const {
  auto pos = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  return pos != edges_.end() && pos->id == id;
}

const Edge& Multigraph::edge(EdgeId id) const {
  auto pos = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  if (pos == edges_.end() || pos->id != id)
    fail(ErrorCode::kInvalidInput, "no edge with id " + std::to_string(id));
  return *pos;
}

int Multigraph::degree(Vertex v) const {
  check_vertex(v);
  return degree_[v];
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(), [&](const Edge& e) {
        return (e.u == u && e.v == v) || (e.u == v && e.v == u);
      }));
}

std::vector<EdgeId> Multigraph::incident(Vertex v) const {
  check_vertex(v);
  std::vector<EdgeId> out;
  for (const auto& e : edges_)
    if (e.touches(v)) out.push_back(e.id);
  return out;
}

std::vector<Vertex> Multigraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (const auto& e : edges_)
    if (e.touches(v)) out.push_back(e.other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Free operations

std::vector<Vertex> neighbors(const SimpleGraph& g, Vertex v) {
  return g.neighbors(v);
}

namespace {

std::vector<Vertex> sorted_unique(std::span<const Vertex> vs) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

InducedSubgraph induced_subgraph(const SimpleGraph& g,
                                 std::span<const Vertex> u) {
  InducedSubgraph out;
  out.original = sorted_unique(u);
  for (Vertex v : out.original) g.check_vertex(v);
  const int k = static_cast<int>(out.original.size());
  out.graph = SimpleGraph(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(out.original[i], out.original[j])) out.graph.add_edge(i, j);
  return out;
}

std::vector<EdgeId> edge_neighborhood(const Multigraph& h, EdgeId x) {
  const Edge ex = h.edge(x);
  std::vector<EdgeId> out;
  for (const auto& e : h.edges())
    if (e.id != x && (e.touches(ex.u) || e.touches(ex.v))) out.push_back(e.id);
  return out;
}

int edge_degree(const Multigraph& h, EdgeId x) {
  return static_cast<int>(edge_neighborhood(h, x).size());
}

std::vector<EdgeId> pendant_edges(const Multigraph& h, Vertex v) {
  std::vector<EdgeId> out;
  for (EdgeId id : h.incident(v))
    if (h.degree(h.edge(id).other(v)) == 1) out.push_back(id);
  return out;
}

std::vector<Vertex> degree_one_vertices(const Multigraph& h) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) == 1) out.push_back(v);
  return out;
}

Contraction contract(const Multigraph& h, std::span<const Vertex> f) {
  require(!f.empty(), ErrorCode::kInvalidInput, "contraction of empty set");
  std::vector<char> in_f(h.vertex_count(), 0);
  for (Vertex v : f) {
    h.check_vertex(v);
    in_f[v] = 1;
  }
  Contraction out;
  out.vertex_map.assign(h.vertex_count(), -1);
  int next = 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (!in_f[v]) out.vertex_map[v] = next++;
  out.merged = next;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (in_f[v]) out.vertex_map[v] = out.merged;
  out.graph = Multigraph(next + 1);
  for (const auto& e : h.edges()) {
    if (in_f[e.u] && in_f[e.v]) continue;
    out.graph.add_edge_with_id(e.id, out.vertex_map[e.u], out.vertex_map[e.v]);
  }
  return out;
}

InducedMultigraph induced_submultigraph(const Multigraph& h,
                                        std::span<const Vertex> f) {
  InducedMultigraph out;
  out.original = sorted_unique(f);
  std::vector<int> index(h.vertex_count(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    h.check_vertex(out.original[i]);
    index[out.original[i]] = static_cast<int>(i);
  }
  out.graph = Multigraph(static_cast<int>(out.original.size()));
  for (const auto& e : h.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0)
      out.graph.add_edge_with_id(e.id, index[e.u], index[e.v]);
  return out;
}

int edges_avoiding(const Multigraph& h, std::span<const Vertex> x) {
  std::vector<char> in_x(h.vertex_count(), 0);
  for (Vertex v : x) {
    h.check_vertex(v);
    in_x[v] = 1;
  }
  int count = 0;
  for (const auto& e : h.edges())
    if (!in_x[e.u] && !in_x[e.v]) ++count;
  return count;
}

bool is_triangle_free(const SimpleGraph& g) {
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (Vertex w = v + 1; w < n; ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w)) return false;
    }
  return true;
}

namespace {

int count_components(int n, const std::vector<std::vector<Vertex>>& adj,
                     const std::vector<char>& active) {
  std::vector<char> seen(n, 0);
  int components = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (!active[s] || seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v])
        if (active[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return components;
}

std::vector<std::vector<Vertex>> adjacency_lists(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

}  // namespace

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> active(g.vertex_count(), 1);
  return count_components(g.vertex_count(), adjacency_lists(g), active) == 1;
}

bool is_2_connected(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  // Articulation points by DFS low-link, iterative.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
  std::vector<std::size_t> next_index(n, 0);
  auto adj = adjacency_lists(g);
  int time = 0;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = time++;
  while (!stack.empty()) {
    Vertex v = stack.back();
    if (next_index[v] < adj[v].size()) {
      Vertex w = adj[v][next_index[v]++];
      if (disc[w] < 0) {
        parent[w] = v;
        ++child_count[v];
        disc[w] = low[w] = time++;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      if (parent[v] >= 0) {
        Vertex p = parent[v];
        low[p] = std::min(low[p], low[v]);
        if (parent[p] >= 0 && low[v] >= disc[p]) return false;
      }
    }
  }
  return child_count[0] < 2;
}

bool is_connected(const Multigraph& h) {
  const int n = h.vertex_count();
  if (n == 0) return true;
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : h.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> active(n, 1);
  return count_components(n, adj, active) == 1;
}

bool is_essentially_k_edge_connected(const Multigraph& h, int k) {
  require(k >= 1 && k <= 4, ErrorCode::kInvalidInput,
          "essential edge-connectivity is only checked for 1 <= k <= 4");
  require(is_connected(h), ErrorCode::kInvalidInput,
          "essential edge-connectivity needs a connected multigraph");
  const int n = h.vertex_count();
  const auto edges = h.edges();
  const int m = static_cast<int>(edges.size());

  std::vector<char> removed(m, 0);
  auto edge_components_ok = [&]() {
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<char> active(n, 0);
    for (int i = 0; i < m; ++i) {
      if (removed[i]) continue;
      const auto& e = edges[i];
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
      active[e.u] = active[e.v] = 1;
    }
    return count_components(n, adj, active) <= 1;
  };

  std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
    if (!edge_components_ok()) return false;
    if (left == 0) return true;
    for (int i = start; i < m; ++i) {
      removed[i] = 1;
      bool ok = rec(i + 1, left - 1);
      removed[i] = 0;
      if (!ok) return false;
    }
    return true;
  };
  return rec(0, k - 1);
}

}  // namespace clawham
