#include "clawham/collapsible.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

namespace clawham {

namespace {

using Mask = std::uint64_t;

// Enumerates edge subsets of h in increasing size, calling visit(subset mask,
// odd-vertex mask) for each spanning connected one; visit returns false to stop.
void for_each_spanning_connected(
    const Multigraph& h, const std::function<bool(Mask, Mask)>& visit) {
  const int n = h.vertex_count();
  const int m = h.edge_count();
  const auto edges = h.edges();
  std::vector<int> parent(n);
  auto spanning_connected = [&](Mask subset) {
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    int components = n;
    for (Mask s = subset; s; s &= s - 1) {
      const auto& e = edges[std::countr_zero(s)];
      int a = find(e.u), b = find(e.v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return components == 1;
  };
  auto odd_mask = [&](Mask subset) {
    Mask odd = 0;
    for (Mask s = subset; s; s &= s - 1) {
      const auto& e = edges[std::countr_zero(s)];
      odd ^= (Mask{1} << e.u) ^ (Mask{1} << e.v);
    }
    return odd;
  };
  const Mask limit = Mask{1} << m;
  for (int k = std::max(n - 1, 0); k <= m; ++k) {
    if (k == 0) {
      if (spanning_connected(0) && !visit(0, 0)) return;
      continue;
    }
    Mask s = (Mask{1} << k) - 1;
    while (s < limit) {
      if (spanning_connected(s) && !visit(s, odd_mask(s))) return;
      const Mask c = s & (~s + 1);
      const Mask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
}

std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<EdgeId> mask_edges(const Multigraph& h, Mask m) {
  std::vector<EdgeId> out;
  const auto edges = h.edges();
  for (; m; m &= m - 1) out.push_back(edges[std::countr_zero(m)].id);
  return out;
}

void check_enumerable(const Multigraph& h) {
  require(h.vertex_count() >= 2, ErrorCode::kPrecondition,
          "collapsibility needs at least two vertices");
  require(h.vertex_count() <= 62, ErrorCode::kInvalidInput,
          "collapsibility check supports at most 62 vertices");
}

}  // namespace

CollapsibleResult is_collapsible(const Multigraph& h) {
  check_enumerable(h);
  CollapsibleResult out;
  if (h.edge_count() > kCollapsibleEdgeCap) {
    out.status = SearchStatus::kInconclusive;
    return out;
  }
  const int n = h.vertex_count();
  const std::size_t even_sets = std::size_t{1} << (n - 1);
  for_each_spanning_connected(h, [&](Mask subset, Mask odd) {
    if (!out.witnesses.count(odd))
      out.witnesses.emplace(odd, SpanningParityWitness{mask_vertices(odd),
                                                       mask_edges(h, subset)});
    return out.witnesses.size() < even_sets;
  });
  if (out.witnesses.size() == even_sets) {
    out.status = SearchStatus::kFound;
    return out;
  }
  out.status = SearchStatus::kAbsent;
  const Mask all = (Mask{1} << n) - 1;
  for (Mask s = 0; s <= all; ++s)
    if (std::popcount(s) % 2 == 0 && !out.witnesses.count(s)) {
      out.failing_demand = mask_vertices(s);
      break;
    }
  out.witnesses.clear();
  return out;
}

bool collapsible_or_trivial(const Multigraph& h) {
  if (h.vertex_count() == 1) return true;
  const auto r = is_collapsible(h);
  if (r.status == SearchStatus::kInconclusive)
    fail(ErrorCode::kInconclusive, "multigraph too large for the collapsibility check");
  return r.collapsible();
}

std::optional<SpanningParityWitness> parity_witness(
    const Multigraph& h, std::span<const Vertex> demand) {
  check_enumerable(h);
  require(demand.size() % 2 == 0, ErrorCode::kInvalidInput,
          "parity demand must have even cardinality");
  require(h.edge_count() <= kCollapsibleEdgeCap, ErrorCode::kInconclusive,
          "multigraph too large for the parity-witness search");
  Mask target = 0;
  for (Vertex v : demand) {
    h.check_vertex(v);
    target ^= Mask{1} << v;
  }
  require(static_cast<std::size_t>(std::popcount(target)) == demand.size(),
          ErrorCode::kInvalidInput, "parity demand repeats a vertex");
  std::optional<SpanningParityWitness> out;
  for_each_spanning_connected(h, [&](Mask subset, Mask odd) {
    if (odd != target) return true;
    out = SpanningParityWitness{mask_vertices(odd), mask_edges(h, subset)};
    return false;
  });
  return out;
}

bool is_parity_witness(const Multigraph& h, const SpanningParityWitness& w) {
  const int n = h.vertex_count();
  std::vector<int> deg(n, 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<EdgeId> ids = w.subgraph;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  for (EdgeId id : ids) {
    if (!h.has_edge_id(id)) return false;
    const Edge& e = h.edge(id);
    ++deg[e.u];
    ++deg[e.v];
    parent[find(e.u)] = find(e.v);
  }
  for (Vertex v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  std::vector<char> in_demand(n, 0);
  for (Vertex v : w.demand) {
    if (v < 0 || v >= n) return false;
    in_demand[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v)
    if ((deg[v] % 2 == 1) != (in_demand[v] != 0)) return false;
  return true;
}

ClosedTrail catlin_lift_dct(const Multigraph& h, std::span<const Vertex> f,
                            const ClosedTrail& contracted_dct) {
  const Contraction c = contract(h, f);
  require(is_dct(c.graph, contracted_dct), ErrorCode::kPrecondition,
          "catlin_lift_dct: trail is not a DCT of H/F");
  require(contracted_dct.contains(c.merged), ErrorCode::kPrecondition,
          "catlin_lift_dct: trail does not pass through v_F");

  std::vector<Vertex> back(c.graph.vertex_count(), -1);
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (c.vertex_map[v] != c.merged) back[c.vertex_map[v]] = v;

  const auto sub = induced_submultigraph(h, f);
  if (sub.graph.vertex_count() == 1) {
    ClosedTrail out = contracted_dct;
    for (auto& v : out.vertices) v = v == c.merged ? sub.original[0] : back[v];
    return out;
  }
  require(collapsible_or_trivial(sub.graph), ErrorCode::kPrecondition,
          "catlin_lift_dct: H[F] is not collapsible");

  // Attachment parity: each trail edge at v_F lands on one vertex of F.
  std::vector<int> local(h.vertex_count(), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i)
    local[sub.original[i]] = static_cast<int>(i);
  std::vector<int> hits(sub.original.size(), 0);
  for (EdgeId id : contracted_dct.edges) {
    const Edge& e = h.edge(id);
    if (local[e.u] >= 0) ++hits[local[e.u]];
    if (local[e.v] >= 0) ++hits[local[e.v]];
  }
  std::vector<Vertex> demand;
  for (std::size_t i = 0; i < hits.size(); ++i)
    if (hits[i] % 2) demand.push_back(static_cast<Vertex>(i));
  const auto witness = parity_witness(sub.graph, demand);
  if (!witness)
    fail(ErrorCode::kInternal, "catlin_lift_dct: collapsible H[F] has no parity witness");

  std::vector<EdgeId> ids = contracted_dct.edges;
  ids.insert(ids.end(), witness->subgraph.begin(), witness->subgraph.end());
  return euler_tour(h, ids);
}

bool catlin_collapsible_compose(const Multigraph& h, std::span<const Vertex> f) {
  const auto sub = induced_submultigraph(h, f);
  require(collapsible_or_trivial(sub.graph), ErrorCode::kPrecondition,
          "catlin_collapsible_compose: H[F] is not collapsible");
  const auto c = contract(h, f);
  const bool result = collapsible_or_trivial(c.graph);
  if (result && h.vertex_count() >= 2 && h.edge_count() <= kCollapsibleEdgeCap &&
      !is_collapsible(h).collapsible())
    fail(ErrorCode::kInternal,
         "catlin_collapsible_compose: H/F collapsible but H is not");
  return result;
}

// ---------------------------------------------------------------------------
// Certificate reduction

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::kTwoCycle: return "2-cycle";
    case Certificate::kThreeCycle: return "3-cycle";
    case Certificate::kK33Minus: return "K3,3-";
    case Certificate::kK33: return "K3,3";
  }
  return "?";
}

namespace {

struct Found {
  Certificate certificate;
  std::vector<Vertex> vertices;
};

std::optional<Found> find_certificate(const Multigraph& h) {
  const int n = h.vertex_count();
  std::vector<int> mult(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : h.edges()) {
    ++mult[e.u * n + e.v];
    ++mult[e.v * n + e.u];
  }
  auto adj = [&](int a, int b) { return mult[a * n + b] > 0; };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mult[u * n + v] >= 2) return Found{Certificate::kTwoCycle, {u, v}};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!adj(u, v)) continue;
      for (int w = v + 1; w < n; ++w)
        if (adj(u, w) && adj(v, w)) return Found{Certificate::kThreeCycle, {u, v, w}};
    }
  if (n < 6) return std::nullopt;
  std::vector<int> pick(6);
  std::function<std::optional<Found>(int, int)> choose = [&](int start, int depth) -> std::optional<Found> {
    if (depth == 6) {
      // Split with pick[0] on the left: choose two partners from the other five.
      for (int i = 1; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
          std::array<int, 3> left{pick[0], pick[i], pick[j]}, right{};
          int r = 0;
          for (int k = 1; k < 6; ++k)
            if (k != i && k != j) right[r++] = pick[k];
          int cross = 0;
          for (int a : left)
            for (int b : right) cross += adj(a, b);
          if (cross >= 8)
            return Found{cross == 9 ? Certificate::kK33 : Certificate::kK33Minus,
                         {pick.begin(), pick.end()}};
        }
      return std::nullopt;
    }
    for (int v = start; v <= n - (6 - depth); ++v) {
      pick[depth] = v;
      if (auto f = choose(v + 1, depth + 1)) return f;
    }
    return std::nullopt;
  };
  return choose(0, 0);
}

}  // namespace

Reduction reduce_by_certificates(const Multigraph& h) {
  Reduction out;
  out.reduced = h;
  while (auto found = find_certificate(out.reduced)) {
    auto c = contract(out.reduced, found->vertices);
    out.log.push_back(ReductionStep{found->certificate, out.reduced,
                                    found->vertices, c.merged});
    out.reduced = std::move(c.graph);
  }
  return out;
}

std::vector<Vertex> merged_vertices(const Reduction& reduction) {
  std::vector<Vertex> live;
  for (const auto& step : reduction.log) {
    const auto c = contract(step.before, step.contracted);
    std::vector<Vertex> next;
    for (Vertex v : live)
      if (c.vertex_map[v] != c.merged) next.push_back(c.vertex_map[v]);
    next.push_back(c.merged);
    live = std::move(next);
  }
  std::sort(live.begin(), live.end());
  return live;
}

ClosedTrail lift_through_reduction(const Reduction& reduction,
                                   const ClosedTrail& reduced_dct) {
  ClosedTrail trail = reduced_dct;
  for (std::size_t i = reduction.log.size(); i-- > 0;) {
    const auto& step = reduction.log[i];
    trail = catlin_lift_dct(step.before, step.contracted, trail);
  }
  return trail;
}

}  // namespace clawham
