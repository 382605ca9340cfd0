#include "clawham/detect.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace clawham {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kAbsent: return "absent";
    case SearchStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::optional<ClawWitness> find_claw(const SimpleGraph& g) {
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    const auto nb = g.neighbors(c);
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k)
          if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
            return ClawWitness{c, {nb[i], nb[j], nb[k]}};
      }
  }
  return std::nullopt;
}

std::optional<ClawWitness> find_claw_at(const SimpleGraph& g, Vertex v) {
  auto claw_with_leaf = [&](Vertex c, Vertex leaf) -> std::optional<ClawWitness> {
    const auto nb = g.neighbors(c);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      if (nb[j] == leaf || g.has_edge(nb[j], leaf)) continue;
      for (std::size_t k = j + 1; k < nb.size(); ++k) {
        if (nb[k] == leaf || g.has_edge(nb[k], leaf) ||
            g.has_edge(nb[j], nb[k]))
          continue;
        std::array<Vertex, 3> leaves{leaf, nb[j], nb[k]};
        std::sort(leaves.begin(), leaves.end());
        return ClawWitness{c, leaves};
      }
    }
    return std::nullopt;
  };
  const auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (auto w = claw_with_leaf(v, nb[i])) return w;
    if (auto w = claw_with_leaf(nb[i], v)) return w;
  }
  return std::nullopt;
}

std::vector<NetWitness> find_induced_nets(const SimpleGraph& g) {
  std::vector<NetWitness> out;
  const int n = g.vertex_count();
  // y must hang off x[i] only: adjacent to x[i], not to the other two.
  auto pendants = [&](Vertex xi, Vertex xj, Vertex xk) {
    std::vector<Vertex> ys;
    for (Vertex y : g.neighbors(xi))
      if (y != xj && y != xk && !g.has_edge(y, xj) && !g.has_edge(y, xk))
        ys.push_back(y);
    return ys;
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
        const auto ya = pendants(a, b, c);
        if (ya.empty()) continue;
        const auto yb = pendants(b, a, c);
        if (yb.empty()) continue;
        const auto yc = pendants(c, a, b);
        for (Vertex y1 : ya)
          for (Vertex y2 : yb) {
            if (g.has_edge(y1, y2)) continue;
            for (Vertex y3 : yc)
              if (!g.has_edge(y1, y3) && !g.has_edge(y2, y3))
                out.push_back(NetWitness{{a, b, c}, {y1, y2, y3}});
          }
      }
    }
  return out;
}

bool is_induced_net(const SimpleGraph& g, const NetWitness& net) {
  std::array<Vertex, 6> vs{net.x[0], net.x[1], net.x[2],
                           net.y[0], net.y[1], net.y[2]};
  for (Vertex v : vs)
    if (v < 0 || v >= g.vertex_count()) return false;
  std::array<Vertex, 6> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  // Index 0..2 = x, 3..5 = y; expected edges x_i x_j and x_i y_i only.
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      bool expected = (i < 3 && j < 3) || (i < 3 && j == i + 3);
      if (g.has_edge(vs[i], vs[j]) != expected) return false;
    }
  return true;
}

std::vector<SubdividedClawWitness> find_induced_subdivided_claws(
    const SimpleGraph& h) {
  std::vector<SubdividedClawWitness> out;
  const int n = h.vertex_count();
  for (Vertex c = 0; c < n; ++c) {
    const auto nb = h.neighbors(c);
    const std::size_t d = nb.size();
    if (d < 3) continue;
    auto outers = [&](Vertex ai, Vertex aj, Vertex ak) {
      std::vector<Vertex> bs;
      for (Vertex b : h.neighbors(ai))
        if (b != c && !h.has_edge(b, c) && !h.has_edge(b, aj) &&
            !h.has_edge(b, ak))
          bs.push_back(b);
      return bs;
    };
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        if (h.has_edge(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          const Vertex a1 = nb[i], a2 = nb[j], a3 = nb[k];
          if (h.has_edge(a1, a3) || h.has_edge(a2, a3)) continue;
          const auto b1s = outers(a1, a2, a3);
          const auto b2s = outers(a2, a1, a3);
          const auto b3s = outers(a3, a1, a2);
          for (Vertex b1 : b1s)
            for (Vertex b2 : b2s) {
              if (b1 == b2 || h.has_edge(b1, b2)) continue;
              for (Vertex b3 : b3s) {
                if (b3 == b1 || b3 == b2 || h.has_edge(b1, b3) ||
                    h.has_edge(b2, b3))
                  continue;
                out.push_back(
                    SubdividedClawWitness{c, {a1, a2, a3}, {b1, b2, b3}});
              }
            }
        }
      }
  }
  return out;
}

bool is_induced_subdivided_claw(const SimpleGraph& h,
                                const SubdividedClawWitness& w) {
  std::array<Vertex, 7> vs{w.center,   w.inner[0], w.inner[1], w.inner[2],
                           w.outer[0], w.outer[1], w.outer[2]};
  for (Vertex v : vs)
    if (v < 0 || v >= h.vertex_count()) return false;
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      bool expected = (i == 0 && j >= 1 && j <= 3) || (i >= 1 && i <= 3 && j == i + 3);
      if (h.has_edge(vs[i], vs[j]) != expected) return false;
    }
  return true;
}

std::vector<SubdividedClawWitness> find_subdivided_claws(const SimpleGraph& h,
                                                         std::size_t limit) {
  std::vector<SubdividedClawWitness> out;
  const int n = h.vertex_count();
  for (Vertex c = 0; c < n; ++c) {
    const auto nb = h.neighbors(c);
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
          const std::array<Vertex, 3> a{nb[i], nb[j], nb[k]};
          auto fresh = [&](Vertex b) {
            return b != c && b != a[0] && b != a[1] && b != a[2];
          };
          for (Vertex b1 : h.neighbors(a[0])) {
            if (!fresh(b1)) continue;
            for (Vertex b2 : h.neighbors(a[1])) {
              if (!fresh(b2) || b2 == b1) continue;
              for (Vertex b3 : h.neighbors(a[2])) {
                if (!fresh(b3) || b3 == b1 || b3 == b2) continue;
                out.push_back(SubdividedClawWitness{c, a, {b1, b2, b3}});
                if (limit && out.size() >= limit) return out;
              }
            }
          }
        }
  }
  return out;
}

bool is_subdivided_claw(const SimpleGraph& h, const SubdividedClawWitness& w) {
  std::array<Vertex, 7> vs{w.center,   w.inner[0], w.inner[1], w.inner[2],
                           w.outer[0], w.outer[1], w.outer[2]};
  for (Vertex v : vs)
    if (v < 0 || v >= h.vertex_count()) return false;
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (int i = 0; i < 3; ++i)
    if (!h.has_edge(w.center, w.inner[i]) || !h.has_edge(w.inner[i], w.outer[i]))
      return false;
  return true;
}

bool is_locally_connected(const SimpleGraph& g, Vertex v) {
  const auto nb = g.neighbors(v);
  if (nb.size() <= 1) return true;
  std::vector<char> seen(nb.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (!seen[j] && g.has_edge(nb[i], nb[j])) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
  }
  return reached == nb.size();
}

bool neighborhood_is_clique(const SimpleGraph& g, Vertex v) {
  const auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j])) return false;
  return true;
}

LocalityClass classify_locality(const SimpleGraph& g) {
  LocalityClass out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (is_locally_connected(g, v)) {
      out.lc.push_back(v);
      if (!neighborhood_is_clique(g, v)) out.el.push_back(v);
    } else {
      out.ld.push_back(v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Family F

std::vector<Vertex> FWitness::vertices() const {
  std::vector<Vertex> vs(a.begin(), a.end());
  vs.insert(vs.end(), b.begin(), b.end());
  for (const auto& c : connectors)
    vs.insert(vs.end(), c.interior.begin(), c.interior.end());
  std::sort(vs.begin(), vs.end());
  return vs;
}

namespace {

class FSearch {
 public:
  FSearch(const SimpleGraph& g, int cap) : g_(g), cap_(cap), in_set_(g.vertex_count(), 0) {}

  SearchResult<FWitness> run() {
    const int n = g_.vertex_count();
    std::vector<std::array<Vertex, 3>> triangles;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        if (!g_.has_edge(a, b)) continue;
        for (Vertex c = b + 1; c < n; ++c)
          if (g_.has_edge(a, c) && g_.has_edge(b, c))
            triangles.push_back({a, b, c});
      }
    for (const auto& ta : triangles)
      for (const auto& tb : triangles) {
        if (tb[0] <= ta[0]) continue;
        if (shares_vertex(ta, tb)) continue;
        std::array<Vertex, 3> perm = tb;
        do {
          if (try_anchors(ta, perm)) return SearchResult<FWitness>::make_found(w_, nodes_);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    return capped_ ? SearchResult<FWitness>::make_inconclusive(nodes_)
                   : SearchResult<FWitness>::make_absent(nodes_);
  }

 private:
  static bool shares_vertex(const std::array<Vertex, 3>& s,
                            const std::array<Vertex, 3>& t) {
    for (Vertex u : s)
      for (Vertex v : t)
        if (u == v) return true;
    return false;
  }

  bool try_anchors(const std::array<Vertex, 3>& a, const std::array<Vertex, 3>& b) {
    // Only a_i b_i may join the triangles, and only for triangle connectors.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && g_.has_edge(a[i], b[j])) return false;
    w_.a = a;
    w_.b = b;
    for (Vertex v : a) in_set_[v] = 1;
    for (Vertex v : b) in_set_[v] = 1;
    bool ok = connect(0);
    for (Vertex v : a) in_set_[v] = 0;
    for (Vertex v : b) in_set_[v] = 0;
    return ok;
  }

  // Neighbours of w inside the current vertex set.
  std::vector<Vertex> set_neighbors(Vertex w) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (in_set_[v] && g_.has_edge(v, w)) out.push_back(v);
    return out;
  }

  bool connect(int i) {
    ++nodes_;
    if (i == 3) return true;
    const Vertex ai = w_.a[i], bi = w_.b[i];
    auto& conn = w_.connectors[i];
    conn.interior.clear();
    if (g_.has_edge(ai, bi)) {
      conn.kind = ConnectorKind::kTriangle;
      for (Vertex c = 0; c < g_.vertex_count(); ++c) {
        if (in_set_[c] || !g_.has_edge(c, ai) || !g_.has_edge(c, bi)) continue;
        if (set_neighbors(c).size() != 2) continue;
        in_set_[c] = 1;
        conn.interior = {c};
        bool ok = connect(i + 1);
        in_set_[c] = 0;
        if (ok) return true;
        conn.interior.clear();
      }
      return false;
    }
    conn.kind = ConnectorKind::kPath;
    return extend_path(i, ai);
  }

  bool extend_path(int i, Vertex prev) {
    ++nodes_;
    const Vertex bi = w_.b[i];
    auto& conn = w_.connectors[i];
    for (Vertex w = 0; w < g_.vertex_count(); ++w) {
      if (in_set_[w] || !g_.has_edge(prev, w)) continue;
      const auto sn = set_neighbors(w);
      const bool ends = g_.has_edge(w, bi);
      if (sn.size() != (ends ? 2u : 1u)) continue;
      const int length_if_end = static_cast<int>(conn.interior.size()) + 2;
      if (length_if_end > cap_) {
        capped_ = true;
        continue;
      }
      in_set_[w] = 1;
      conn.interior.push_back(w);
      bool ok = ends ? connect(i + 1) : extend_path(i, w);
      if (ok) {
        in_set_[w] = 0;
        return true;
      }
      conn.interior.pop_back();
      in_set_[w] = 0;
    }
    return false;
  }

  const SimpleGraph& g_;
  int cap_;
  std::vector<char> in_set_;
  FWitness w_{};
  bool capped_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult<FWitness> find_induced_F_member(const SimpleGraph& g,
                                             const FSearchOptions& opts) {
  int cap = opts.connector_cap > 0 ? opts.connector_cap : g.vertex_count();
  return FSearch(g, cap).run();
}

bool is_induced_F_member(const SimpleGraph& g, const FWitness& w) {
  const auto vs = w.vertices();
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  for (Vertex v : vs)
    if (v < 0 || v >= g.vertex_count()) return false;
  std::set<VertexPair> expected;
  auto add = [&](Vertex u, Vertex v) { expected.insert({std::min(u, v), std::max(u, v)}); };
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      add(w.a[i], w.a[j]);
      add(w.b[i], w.b[j]);
    }
  for (int i = 0; i < 3; ++i) {
    const auto& c = w.connectors[i];
    if (c.kind == ConnectorKind::kTriangle) {
      if (c.interior.size() != 1) return false;
      add(w.a[i], w.b[i]);
      add(w.a[i], c.interior[0]);
      add(w.b[i], c.interior[0]);
    } else {
      if (c.interior.empty()) return false;
      Vertex prev = w.a[i];
      for (Vertex v : c.interior) {
        add(prev, v);
        prev = v;
      }
      add(prev, w.b[i]);
    }
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j]) != (expected.count({vs[i], vs[j]}) > 0))
        return false;
  return true;
}

}  // namespace clawham
