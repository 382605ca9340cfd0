#pragma once

// Brute-force reference implementations used only by the tests. Each one is
// written from the definitions, without sharing code paths with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "clawham/graph.hpp"

namespace oracle {

using clawham::EdgeId;
using clawham::Multigraph;
using clawham::SimpleGraph;
using clawham::Vertex;
using clawham::VertexPair;

inline SimpleGraph make(int n, std::initializer_list<VertexPair> es) {
  SimpleGraph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

inline SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Multigraph multi(int n, std::initializer_list<VertexPair> es) {
  Multigraph h(n);
  for (auto [u, v] : es) h.add_edge(u, v);
  return h;
}

/// Minimum adjacency bit string over all vertex permutations (n <= 8).
inline std::uint64_t canonical_code(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code = code << 1 | (g.has_edge(p[i], p[j]) ? 1 : 0);
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool connected(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v) && !seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

inline bool has_claw(const SimpleGraph& g) {
  const int n = g.vertex_count();
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int d = b + 1; d < n; ++d) {
          if (a == c || b == c || d == c) continue;
          if (g.has_edge(c, a) && g.has_edge(c, b) && g.has_edge(c, d) && !g.has_edge(a, b) &&
              !g.has_edge(a, d) && !g.has_edge(b, d))
            return true;
        }
  return false;
}

inline bool has_triangle(const SimpleGraph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return true;
  return false;
}

/// Held-Karp over subsets (n <= 16). Cycles need n >= 3.
inline bool hamiltonian(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> reach(1u << n, 0);  // reach[S] bit v: path 0..v covering S
  reach[1] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (!(s & 1) || !reach[s]) continue;
    for (int v = 0; v < n; ++v) {
      if (!(reach[s] >> v & 1)) continue;
      for (int w = 1; w < n; ++w)
        if (!(s >> w & 1) && g.has_edge(v, w)) reach[s | 1u << w] |= 1u << w;
    }
  }
  for (int v = 1; v < n; ++v)
    if ((reach[full] >> v & 1) && g.has_edge(v, 0)) return true;
  return false;
}

/// Number of 6-vertex subsets inducing a net (triangle plus three pendants).
inline int induced_net_sets(const SimpleGraph& g) {
  const int n = g.vertex_count();
  int count = 0;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (pick.size() == 6) {
      std::vector<int> deg(6, 0);
      int edges = 0;
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          if (g.has_edge(pick[i], pick[j])) ++deg[i], ++deg[j], ++edges;
      if (edges != 6) return;
      std::vector<int> threes, ones;
      for (int i = 0; i < 6; ++i) {
        if (deg[i] == 3) threes.push_back(i);
        else if (deg[i] == 1) ones.push_back(i);
        else return;
      }
      if (threes.size() != 3) return;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (!g.has_edge(pick[threes[i]], pick[threes[j]])) return;
      ++count;
      return;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return count;
}

inline SimpleGraph line_graph(const SimpleGraph& h) {
  const auto es = h.edges();
  SimpleGraph l(static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].first == es[j].first || es[i].first == es[j].second ||
          es[i].second == es[j].first || es[i].second == es[j].second)
        l.add_edge(static_cast<int>(i), static_cast<int>(j));
  return l;
}

// ---------------------------------------------------------------------------
// Multigraph oracles on edge subsets.

struct EdgeList {
  int n;
  std::vector<VertexPair> e;
};

inline EdgeList edges_of(const Multigraph& h) {
  EdgeList out{h.vertex_count(), {}};
  for (const auto& e : h.edges()) out.e.push_back({e.u, e.v});
  return out;
}

inline bool subset_connected(const EdgeList& g, std::uint32_t mask, std::uint32_t vertices) {
  if (!vertices) return true;
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < g.e.size(); ++i)
    if (mask >> i & 1) parent[find(g.e[i].first)] = find(g.e[i].second);
  int root = -1;
  for (int v = 0; v < g.n; ++v)
    if (vertices >> v & 1) {
      if (root < 0) root = find(v);
      else if (find(v) != root) return false;
    }
  return true;
}

/// Enumerates every closed trail by walking unused edges; calls visit with
/// the trail's vertex mask. Single vertices count as closed trails.
inline void for_each_closed_trail(const EdgeList& g,
                                  const std::function<void(std::uint32_t)>& visit) {
  const int m = static_cast<int>(g.e.size());
  for (int s = 0; s < g.n; ++s) visit(1u << s);
  std::vector<char> used(m, 0);
  std::function<void(int, int, std::uint32_t, int)> walk = [&](int start, int at, std::uint32_t vs,
                                                               int len) {
    if (len > 0 && at == start) visit(vs);
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      auto [a, b] = g.e[i];
      if (a != at && b != at) continue;
      // Trails are recorded from their lowest vertex to halve the work.
      const int next = a == at ? b : a;
      if (next < start) continue;
      used[i] = 1;
      walk(start, next, vs | 1u << next, len + 1);
      used[i] = 0;
    }
  };
  for (int s = 0; s < g.n; ++s) walk(s, s, 1u << s, 0);
}

inline bool dominating(const EdgeList& g, std::uint32_t vs) {
  for (auto [a, b] : g.e)
    if (!(vs >> a & 1) && !(vs >> b & 1)) return false;
  return true;
}

inline bool has_dct(const Multigraph& h, std::uint32_t required = 0) {
  const EdgeList g = edges_of(h);
  bool found = false;
  for_each_closed_trail(g, [&](std::uint32_t vs) {
    if ((vs & required) == required && dominating(g, vs)) found = true;
  });
  return found;
}

/// Definition: for every even S there is a spanning connected subgraph with
/// odd-degree set exactly S. Single vertices are collapsible.
inline bool collapsible(const Multigraph& h) {
  const EdgeList g = edges_of(h);
  const int n = g.n, m = static_cast<int>(g.e.size());
  if (n <= 1) return true;
  const std::uint32_t all = (1u << n) - 1;
  std::set<std::uint32_t> achievable;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (!subset_connected(g, mask, all)) continue;
    std::uint32_t odd = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) odd ^= (1u << g.e[i].first) ^ (1u << g.e[i].second);
    achievable.insert(odd);
  }
  for (std::uint32_t s = 0; s <= all; ++s)
    if (std::popcount(s) % 2 == 0 && !achievable.count(s)) return false;
  return true;
}

/// At most one edge-containing component after deleting any < k edges.
inline bool essentially_k_edge_connected(const Multigraph& h, int k) {
  const EdgeList g = edges_of(h);
  const int m = static_cast<int>(g.e.size());
  for (std::uint32_t del = 0; del < (1u << m); ++del) {
    if (std::popcount(del) >= k) continue;
    const std::uint32_t keep = ((1u << m) - 1) & ~del;
    std::uint32_t touched = 0;
    for (int i = 0; i < m; ++i)
      if (keep >> i & 1) touched |= (1u << g.e[i].first) | (1u << g.e[i].second);
    if (!subset_connected(g, keep, touched)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Closure by definition, in a random order.

inline bool nbhd_connected(const SimpleGraph& g, Vertex v) {
  const auto nb = g.neighbors(v);
  if (nb.empty()) return true;
  std::vector<int> seen(nb.size(), 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (!seen[j] && g.has_edge(nb[i], nb[j])) seen[j] = 1, stack.push_back(static_cast<int>(j));
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s; });
}

inline bool nbhd_clique(const SimpleGraph& g, Vertex v) {
  const auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j])) return false;
  return true;
}

inline SimpleGraph naive_closure(SimpleGraph g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<Vertex> eligible;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (nbhd_connected(g, v) && !nbhd_clique(g, v)) eligible.push_back(v);
    if (eligible.empty()) return g;
    const Vertex v = eligible[rng() % eligible.size()];
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) g.add_edge(nb[i], nb[j]);
  }
}

}  // namespace oracle
