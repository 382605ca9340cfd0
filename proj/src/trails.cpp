#include "clawham/trails.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "clawham/linegraph.hpp"

namespace clawham {

std::vector<Vertex> ClosedTrail::vertex_set() const {
  std::vector<Vertex> out(vertices.begin(), vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ClosedTrail::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

void validate_trail(const Multigraph& h, const ClosedTrail& t) {
  require(!t.vertices.empty(), ErrorCode::kInvalidInput, "empty trail");
  for (Vertex v : t.vertices) h.check_vertex(v);
  if (t.edges.empty()) {
    require(t.vertices.size() == 1, ErrorCode::kInvalidInput,
            "edgeless trail must be a single vertex");
    return;
  }
  require(t.vertices.size() == t.edges.size() + 1, ErrorCode::kInvalidInput,
          "trail needs one more vertex entry than edges");
  require(t.vertices.front() == t.vertices.back(), ErrorCode::kInvalidInput,
          "trail is not closed");
  std::set<EdgeId> used;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const Edge& e = h.edge(t.edges[i]);
    require(used.insert(e.id).second, ErrorCode::kInvalidInput,
            "trail repeats edge " + std::to_string(e.id));
    const Vertex a = t.vertices[i], b = t.vertices[i + 1];
    require((e.u == a && e.v == b) || (e.u == b && e.v == a),
            ErrorCode::kInvalidInput,
            "edge " + std::to_string(e.id) + " does not join consecutive vertices");
  }
}

bool is_closed_trail(const Multigraph& h, const ClosedTrail& t) {
  try {
    validate_trail(h, t);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool dominates(const Multigraph& h, const ClosedTrail& t) {
  validate_trail(h, t);
  std::vector<char> on(h.vertex_count(), 0);
  for (Vertex v : t.vertices) on[v] = 1;
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const Edge& e) { return on[e.u] || on[e.v]; });
}

bool is_dct(const Multigraph& h, const ClosedTrail& t) {
  return is_closed_trail(h, t) && dominates(h, t);
}

ClosedTrail euler_tour(const Multigraph& h, std::span<const EdgeId> edge_ids) {
  require(!edge_ids.empty(), ErrorCode::kInvalidInput, "Euler tour of no edges");
  std::map<Vertex, std::vector<EdgeId>> adj;
  std::vector<EdgeId> ids(edge_ids.begin(), edge_ids.end());
  std::sort(ids.begin(), ids.end());
  for (EdgeId id : ids) {
    const Edge& e = h.edge(id);
    adj[e.u].push_back(id);
    adj[e.v].push_back(id);
  }
  for (const auto& [v, inc] : adj)
    require(inc.size() % 2 == 0, ErrorCode::kInvalidInput,
            "Euler tour needs even degrees; vertex " + std::to_string(v) + " is odd");

  std::set<EdgeId> used;
  std::map<Vertex, std::size_t> cursor;
  // Hierholzer: stack of (vertex, edge used to reach it).
  std::vector<std::pair<Vertex, EdgeId>> stack{{adj.begin()->first, -1}};
  ClosedTrail tour;
  while (!stack.empty()) {
    const Vertex v = stack.back().first;
    auto& inc = adj[v];
    auto& pos = cursor[v];
    while (pos < inc.size() && used.count(inc[pos])) ++pos;
    if (pos < inc.size()) {
      const EdgeId id = inc[pos];
      used.insert(id);
      stack.push_back({h.edge(id).other(v), id});
    } else {
      tour.vertices.push_back(v);
      if (stack.back().second >= 0) tour.edges.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  require(used.size() == ids.size(), ErrorCode::kInvalidInput,
          "Euler tour needs a connected edge set");
  std::reverse(tour.vertices.begin(), tour.vertices.end());
  std::reverse(tour.edges.begin(), tour.edges.end());
  return tour;
}

namespace {

class DctSearch {
 public:
  DctSearch(const Multigraph& h, std::vector<Vertex> required, std::uint64_t budget)
      : h_(h), budget_(budget) {
    required_.assign(h.vertex_count(), 0);
    for (Vertex v : required) {
      h.check_vertex(v);
      required_[v] = 1;
      any_required_ = true;
    }
    const int n = h.vertex_count();
    edges_.assign(h.edges().begin(), h.edges().end());
    const int m = static_cast<int>(edges_.size());
    last_.assign(n, -1);
    for (int i = 0; i < m; ++i) {
      last_[edges_[i].u] = i;
      last_[edges_[i].v] = i;
    }
    finalized_at_.assign(m, {});
    for (Vertex v = 0; v < n; ++v)
      if (last_[v] >= 0) finalized_at_[last_[v]].push_back(v);
    check_at_.assign(m, {});
    for (int i = 0; i < m; ++i)
      check_at_[std::max(last_[edges_[i].u], last_[edges_[i].v])].push_back(i);
    deg_.assign(n, 0);
    chosen_.assign(m, 0);
  }

  SearchResult<ClosedTrail> run() {
    const int n = h_.vertex_count();
    if (n == 0) return SearchResult<ClosedTrail>::make_absent(0);
    // Single-vertex trails first.
    for (Vertex v = 0; v < n; ++v) {
      if (any_required_ && !only_required(v)) continue;
      if (std::all_of(edges_.begin(), edges_.end(),
                      [&](const Edge& e) { return e.touches(v); }))
        return SearchResult<ClosedTrail>::make_found(ClosedTrail::single(v), 1);
    }
    for (Vertex v = 0; v < n; ++v)
      if (required_[v] && last_[v] < 0)
        return SearchResult<ClosedTrail>::make_absent(1);
    if (rec(0)) {
      std::vector<EdgeId> ids;
      for (std::size_t i = 0; i < edges_.size(); ++i)
        if (chosen_[i]) ids.push_back(edges_[i].id);
      return SearchResult<ClosedTrail>::make_found(euler_tour(h_, ids), budget_.used());
    }
    if (budget_.exhausted())
      return SearchResult<ClosedTrail>::make_inconclusive(budget_.used());
    return SearchResult<ClosedTrail>::make_absent(budget_.used());
  }

 private:
  bool only_required(Vertex v) const {
    for (Vertex w = 0; w < h_.vertex_count(); ++w)
      if (required_[w] && w != v) return false;
    return required_[v] != 0;
  }

  bool consistent_after(int i) const {
    for (Vertex v : finalized_at_[i]) {
      if (deg_[v] % 2) return false;
      if (required_[v] && deg_[v] == 0) return false;
    }
    for (int e : check_at_[i])
      if (deg_[edges_[e].u] == 0 && deg_[edges_[e].v] == 0) return false;
    return true;
  }

  bool connected_choice() const {
    std::vector<int> parent(h_.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    bool any = false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (chosen_[i]) {
        any = true;
        parent[find(edges_[i].u)] = find(edges_[i].v);
      }
    if (!any) return false;
    int root = -1;
    for (Vertex v = 0; v < h_.vertex_count(); ++v) {
      if (deg_[v] == 0) continue;
      if (root < 0) root = find(v);
      else if (find(v) != root) return false;
    }
    return true;
  }

  bool rec(int i) {
    if (!budget_.tick()) return false;
    if (i == static_cast<int>(edges_.size())) return connected_choice();
    const Edge& e = edges_[i];
    for (int take = 1; take >= 0; --take) {
      chosen_[i] = static_cast<char>(take);
      deg_[e.u] += take;
      deg_[e.v] += take;
      if (consistent_after(i) && rec(i + 1)) return true;
      deg_[e.u] -= take;
      deg_[e.v] -= take;
      chosen_[i] = 0;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Multigraph& h_;
  std::vector<char> required_;
  bool any_required_ = false;
  Budget budget_;
  std::vector<Edge> edges_;
  std::vector<int> last_;
  std::vector<std::vector<Vertex>> finalized_at_;
  std::vector<std::vector<int>> check_at_;
  std::vector<int> deg_;
  std::vector<char> chosen_;
};

}  // namespace

SearchResult<ClosedTrail> find_dct(const Multigraph& h,
                                   const TrailSearchOptions& opts) {
  return DctSearch(h, {}, opts.budget).run();
}

SearchResult<ClosedTrail> find_dct_through(const Multigraph& h, Vertex x,
                                           const TrailSearchOptions& opts) {
  h.check_vertex(x);
  return DctSearch(h, {x}, opts.budget).run();
}

SearchResult<ClosedTrail> find_dct_containing(const Multigraph& h,
                                              std::span<const Vertex> required,
                                              const TrailSearchOptions& opts) {
  return DctSearch(h, {required.begin(), required.end()}, opts.budget).run();
}

// ---------------------------------------------------------------------------
// Hamiltonian cycles

namespace {

using Mask = std::uint64_t;

class HamSearch {
 public:
  HamSearch(const SimpleGraph& g, std::uint64_t budget) : n_(g.vertex_count()), budget_(budget) {
    adj_.assign(n_, 0);
    for (auto [u, v] : g.edges()) {
      adj_[u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << u;
    }
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  SearchResult<HamiltonianCycle> run() {
    path_.push_back(0);
    if (rec(0, Mask{1}))
      return SearchResult<HamiltonianCycle>::make_found(path_, budget_.used());
    if (budget_.exhausted())
      return SearchResult<HamiltonianCycle>::make_inconclusive(budget_.used());
    return SearchResult<HamiltonianCycle>::make_absent(budget_.used());
  }

 private:
  bool rec(Vertex end, Mask visited) {
    if (!budget_.tick()) return false;
    if (static_cast<int>(path_.size()) == n_) return (adj_[end] & 1) != 0;
    const Mask unvisited = all_ & ~visited;
    const Mask open = unvisited | (Mask{1} << end) | Mask{1};
    for (Mask rest = unvisited; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (std::popcount(adj_[w] & open) < 2) return false;
    }
    // Unvisited vertices must stay reachable from the path end.
    Mask reach = Mask{1} << end, frontier = reach;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= unvisited & ~reach;
      reach |= next;
      frontier = next;
    }
    if ((reach & unvisited) != unvisited) return false;

    for (Mask cand = adj_[end] & unvisited; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      path_.push_back(w);
      if (rec(w, visited | (Mask{1} << w))) return true;
      path_.pop_back();
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  int n_;
  Budget budget_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace

SearchResult<HamiltonianCycle> hamiltonian_cycle(const SimpleGraph& g,
                                                 const TrailSearchOptions& opts) {
  const int n = g.vertex_count();
  require(n <= 64, ErrorCode::kInvalidInput,
          "Hamiltonian cycle search supports at most 64 vertices");
  if (n < 3 || !is_2_connected(g))
    return SearchResult<HamiltonianCycle>::make_absent(0);
  return HamSearch(g, opts.budget).run();
}

bool is_hamiltonian_cycle(const SimpleGraph& g, const HamiltonianCycle& c) {
  const int n = g.vertex_count();
  if (n < 3 || static_cast<int>(c.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : c) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(c[i], c[(i + 1) % n])) return false;
  return true;
}

bool hn_check(const SimpleGraph& h, const TrailSearchOptions& opts) {
  require(h.edge_count() >= 3, ErrorCode::kPrecondition,
          "Harary-Nash-Williams needs at least 3 edges");
  const auto lg = line_graph(h);
  const auto ham = hamiltonian_cycle(lg.graph, opts);
  const auto dct = find_dct(Multigraph::from_simple(h), opts);
  if (ham.inconclusive() || dct.inconclusive())
    fail(ErrorCode::kInconclusive, "hn_check: search budget exhausted");
  if (ham.found() != dct.found())
    fail(ErrorCode::kInternal,
         std::string("hn_check: line graph hamiltonian = ") +
             (ham.found() ? "yes" : "no") + " but DCT " +
             (dct.found() ? "found" : "absent"));
  return ham.found();
}

}  // namespace clawham
