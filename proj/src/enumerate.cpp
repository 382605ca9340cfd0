#include "clawham/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "clawham/detect.hpp"
#include "clawham/iso.hpp"

namespace clawham {

namespace {

SimpleGraph with_new_vertex(const SimpleGraph& g, std::uint32_t subset) {
  const int n = g.vertex_count();
  SimpleGraph out(n + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int u = 0; u < n; ++u)
    if (subset >> u & 1u) out.add_edge(u, n);
  return out;
}

bool independent(const SimpleGraph& g, std::uint32_t subset) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    if (!(subset >> u & 1u)) continue;
    for (int v = u + 1; v < n; ++v)
      if ((subset >> v & 1u) && g.has_edge(u, v)) return false;
  }
  return true;
}

/// Claws created by the newest vertex are centred at it or at a neighbour.
bool new_vertex_claw_free(const SimpleGraph& g) {
  const Vertex v = g.vertex_count() - 1;
  if (find_claw_at(g, v)) return false;
  for (Vertex u : g.neighbors(v))
    if (find_claw_at(g, u)) return false;
  return true;
}

using Admit = std::function<bool(const SimpleGraph& base, std::uint32_t subset)>;
using Accept = std::function<bool(const SimpleGraph& extended)>;

std::vector<SimpleGraph> grow(const std::vector<SimpleGraph>& level,
                              const Admit& admit, const Accept& accept) {
  std::vector<SimpleGraph> out;
  IsoDedup seen;
  for (const SimpleGraph& g : level) {
    const std::uint32_t full = (1u << g.vertex_count()) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
      if (!admit(g, s)) continue;
      SimpleGraph h = with_new_vertex(g, s);
      if (!accept(h)) continue;
      if (seen.insert(AdjMatrix::of(h))) out.push_back(std::move(h));
    }
  }
  return out;
}

std::vector<SimpleGraph> apply_filter(std::vector<SimpleGraph> gs,
                                      const GraphFilter& filter) {
  if (!filter) return gs;
  std::vector<SimpleGraph> out;
  for (auto& g : gs)
    if (filter(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<SimpleGraph> enumerate_connected(int n, const GraphFilter& filter) {
  require(n >= 1, ErrorCode::kInvalidInput, "enumeration needs n >= 1");
  require(n <= kConnectedCap, ErrorCode::kInvalidInput,
          "internal enumeration stops at n = " + std::to_string(kConnectedCap) +
              "; supply a graph6 corpus file for n = " + std::to_string(n));
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (int k = 2; k <= n; ++k)
    level = grow(level, [](const SimpleGraph&, std::uint32_t) { return true; },
                 [](const SimpleGraph&) { return true; });
  return apply_filter(std::move(level), filter);
}

std::vector<SimpleGraph> enumerate_connected_claw_free(int n,
                                                       const GraphFilter& filter) {
  require(n >= 1, ErrorCode::kInvalidInput, "enumeration needs n >= 1");
  require(n <= kClawFreeCap, ErrorCode::kInvalidInput,
          "claw-free enumeration stops at n = " + std::to_string(kClawFreeCap));
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (int k = 2; k <= n; ++k)
    level = grow(level, [](const SimpleGraph&, std::uint32_t) { return true; },
                 new_vertex_claw_free);
  return apply_filter(std::move(level), filter);
}

std::vector<SimpleGraph> enumerate_by_edges(int max_edges, bool triangle_free) {
  require(max_edges >= 1 && max_edges <= 16, ErrorCode::kInvalidInput,
          "edge-count enumeration supports 1..16 edges");
  std::vector<SimpleGraph> all;
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (int k = 2; k <= max_edges + 1; ++k) {
    level = grow(
        level,
        [&](const SimpleGraph& g, std::uint32_t s) {
          if (g.edge_count() + std::popcount(s) > max_edges) return false;
          return !triangle_free || independent(g, s);
        },
        [](const SimpleGraph&) { return true; });
    for (const auto& g : level) all.push_back(g);
  }
  std::stable_sort(all.begin(), all.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
    return a.edge_count() < b.edge_count();
  });
  return all;
}

namespace {

Multigraph from_matrix(const AdjMatrix& a) {
  Multigraph h(a.n);
  for (int u = 0; u < a.n; ++u)
    for (int v = u + 1; v < a.n; ++v)
      for (int k = 0; k < a.at(u, v); ++k) h.add_edge(u, v);
  return h;
}

AdjMatrix widen(const AdjMatrix& a) {
  AdjMatrix out;
  out.n = a.n + 1;
  out.w.assign(static_cast<std::size_t>(out.n) * out.n, 0);
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < a.n; ++v) out.at(u, v) = a.at(u, v);
  return out;
}

// Assigns multiplicities from the new vertex to old vertices idx..n-1.
void extend_multi(AdjMatrix& m, int idx, int remaining, int added,
                  IsoDedup& seen, std::vector<AdjMatrix>& out) {
  const int nv = m.n - 1;
  if (idx == nv) {
    if (added > 0 && seen.insert(m)) out.push_back(m);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    m.at(idx, nv) = m.at(nv, idx) = static_cast<std::uint8_t>(k);
    extend_multi(m, idx + 1, remaining - k, added + k, seen, out);
  }
  m.at(idx, nv) = m.at(nv, idx) = 0;
}

}  // namespace

std::vector<Multigraph> enumerate_multigraphs_by_edges(int max_edges) {
  require(max_edges >= 1 && max_edges <= 12, ErrorCode::kInvalidInput,
          "multigraph enumeration supports 1..12 edges");
  std::vector<std::pair<int, AdjMatrix>> all;
  AdjMatrix k1;
  k1.n = 1;
  k1.w = {0};
  std::vector<std::pair<int, AdjMatrix>> level{{0, k1}};
  for (int k = 2; k <= max_edges + 1; ++k) {
    std::vector<std::pair<int, AdjMatrix>> next;
    IsoDedup seen;
    for (const auto& [edges, a] : level) {
      AdjMatrix m = widen(a);
      std::vector<AdjMatrix> found;
      extend_multi(m, 0, max_edges - edges, 0, seen, found);
      for (auto& f : found) {
        int e = 0;
        for (int u = 0; u < f.n; ++u) e += f.at(u, f.n - 1);
        next.push_back({edges + e, std::move(f)});
      }
    }
    level = std::move(next);
    for (const auto& p : level) all.push_back(p);
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Multigraph> out;
  out.reserve(all.size());
  for (const auto& p : all) out.push_back(from_matrix(p.second));
  return out;
}

}  // namespace clawham
