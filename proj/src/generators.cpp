#include "clawham/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

#include "clawham/linegraph.hpp"

namespace clawham {

SimpleGraph sharpness_graph(int m) {
  require(m >= 3, ErrorCode::kInvalidInput,
          "sharpness graph needs clique order m >= 3");
  SimpleGraph g(3 * m);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) g.add_edge(i * m + a, i * m + b);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      g.add_edge(sharpness_x(m, i), sharpness_x(m, j));
      g.add_edge(sharpness_y(m, i), sharpness_y(m, j));
    }
  return g;
}

FSpec parse_fspec(std::string_view text) {
  FSpec spec;
  int idx = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, comma - pos);
    require(idx < 3, ErrorCode::kInvalidInput, "F spec has more than 3 connectors");
    ConnectorSpec c;
    if (tok == "t" || tok == "T") {
      c.kind = ConnectorKind::kTriangle;
    } else {
      require(tok.size() >= 2 && (tok[0] == 'p' || tok[0] == 'P'),
              ErrorCode::kInvalidInput,
              "F spec connector must be pN or t, got '" + std::string(tok) + "'");
      int len = 0;
      auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), len);
      require(ec == std::errc() && p == tok.data() + tok.size(),
              ErrorCode::kInvalidInput, "bad path length in '" + std::string(tok) + "'");
      require(len >= 2, ErrorCode::kInvalidInput,
              "path connectors need length >= 2, got '" + std::string(tok) + "'");
      c.kind = ConnectorKind::kPath;
      c.length = len;
    }
    spec.connectors[idx++] = c;
    pos = comma + 1;
  }
  require(idx == 3, ErrorCode::kInvalidInput, "F spec needs exactly 3 connectors");
  return spec;
}

std::string format_fspec(const FSpec& spec) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out += ',';
    const auto& c = spec.connectors[i];
    out += c.kind == ConnectorKind::kTriangle ? std::string("t")
                                              : "p" + std::to_string(c.length);
  }
  return out;
}

FMember brousek_F(const FSpec& spec) {
  int n = 6;
  for (const auto& c : spec.connectors) {
    if (c.kind == ConnectorKind::kPath) {
      require(c.length >= 2 && c.length <= 1000, ErrorCode::kInvalidInput,
              "F path connector length must be at least 2");
      n += c.length - 1;
    } else {
      n += 1;
    }
  }
  FMember out{SimpleGraph(n), {}};
  SimpleGraph& g = out.graph;
  FWitness& w = out.witness;
  for (int i = 0; i < 3; ++i) {
    w.a[i] = i;
    w.b[i] = 3 + i;
  }
  g.add_edge(0, 1), g.add_edge(1, 2), g.add_edge(0, 2);
  g.add_edge(3, 4), g.add_edge(4, 5), g.add_edge(3, 5);
  Vertex next = 6;
  for (int i = 0; i < 3; ++i) {
    const auto& c = spec.connectors[i];
    Connector conn{c.kind, {}};
    if (c.kind == ConnectorKind::kTriangle) {
      conn.interior.push_back(next);
      g.add_edge(w.a[i], w.b[i]);
      g.add_edge(w.a[i], next);
      g.add_edge(w.b[i], next);
      ++next;
    } else {
      Vertex prev = w.a[i];
      for (int k = 0; k < c.length - 1; ++k) {
        conn.interior.push_back(next);
        g.add_edge(prev, next);
        prev = next++;
      }
      g.add_edge(prev, w.b[i]);
    }
    w.connectors[i] = std::move(conn);
  }
  return out;
}

SimpleGraph named_small(std::string_view name, int size) {
  auto pairs = [](int n, std::initializer_list<VertexPair> es) {
    return SimpleGraph::from_edges(n, std::vector<VertexPair>(es));
  };
  if (name == "net")
    return pairs(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "subdivided_claw")
    return pairs(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
  if (name == "claw") return pairs(4, {{0, 1}, {0, 2}, {0, 3}});
  if (name == "k33" || name == "k33_minus") {
    SimpleGraph g(6);
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) g.add_edge(a, b);
    if (name == "k33_minus") g.remove_edge(2, 5);
    return g;
  }
  if (name == "petersen") {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(5 + i, 5 + (i + 2) % 5);
      g.add_edge(i, 5 + i);
    }
    return g;
  }
  if (name == "cycle") {
    require(size >= 3, ErrorCode::kInvalidInput, "cycle needs at least 3 vertices");
    SimpleGraph g(size);
    for (int i = 0; i < size; ++i) g.add_edge(i, (i + 1) % size);
    return g;
  }
  if (name == "path") {
    require(size >= 1, ErrorCode::kInvalidInput, "path needs at least 1 vertex");
    SimpleGraph g(size);
    for (int i = 0; i + 1 < size; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (name == "complete") {
    require(size >= 1, ErrorCode::kInvalidInput, "complete graph needs at least 1 vertex");
    SimpleGraph g(size);
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) g.add_edge(i, j);
    return g;
  }
  fail(ErrorCode::kInvalidInput, "unknown graph name '" + std::string(name) + "'");
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<Vertex>& perm) {
  require(static_cast<int>(perm.size()) == g.vertex_count(),
          ErrorCode::kInvalidInput, "relabel: permutation size mismatch");
  SimpleGraph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

namespace {

bool closes_triangle(const SimpleGraph& g, Vertex u, Vertex v) {
  for (Vertex w : g.neighbors(u))
    if (g.has_edge(w, v)) return true;
  return false;
}

SimpleGraph triangle_free_with_edges(int m, std::mt19937_64& rng) {
  // Vertex count k with m in [k - 1, k^2 / 4]; start from a random tree and
  // add random non-edges that close no triangle. Restart if stuck.
  int kmin = 2;
  while (kmin * kmin / 4 < m) ++kmin;
  const int kmax = m + 1;
  for (;;) {
    std::uniform_int_distribution<int> pick_k(kmin, kmax);
    const int k = pick_k(rng);
    SimpleGraph g(k);
    for (int v = 1; v < k; ++v) {
      std::uniform_int_distribution<int> parent(0, v - 1);
      g.add_edge(parent(rng), v);
    }
    std::vector<VertexPair> cand;
    while (g.edge_count() < m) {
      cand.clear();
      for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v)
          if (!g.has_edge(u, v) && !closes_triangle(g, u, v)) cand.push_back({u, v});
      if (cand.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
      auto [u, v] = cand[pick(rng)];
      g.add_edge(u, v);
    }
    if (g.edge_count() == m) return g;
  }
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

SimpleGraph random_triangle_free(int m, std::uint64_t seed) {
  require(m >= 1, ErrorCode::kInvalidInput, "random triangle-free graph needs m >= 1");
  std::mt19937_64 rng(seed);
  SimpleGraph g = triangle_free_with_edges(m, rng);
  return relabel(g, random_permutation(g.vertex_count(), rng));
}

SimpleGraph random_claw_free(int n, std::uint64_t seed, RandomStrategy strategy) {
  require(n >= 1, ErrorCode::kInvalidInput, "random claw-free graph needs n >= 1");
  std::mt19937_64 rng(seed);
  const SimpleGraph root = triangle_free_with_edges(n, rng);
  SimpleGraph g = line_graph(root).graph;
  g = relabel(g, random_permutation(n, rng));
  if (strategy == RandomStrategy::kLineGraphThinned && g.edge_count() > 0) {
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::uniform_int_distribution<std::size_t> how_many(0, edges.size() / 2);
    const std::size_t tries = how_many(rng);
    for (std::size_t i = 0; i < tries; ++i) {
      auto [u, v] = edges[i];
      g.remove_edge(u, v);
      // Only a common neighbour can become the center of a new claw.
      bool bad = !is_connected(g);
      for (Vertex w : g.neighbors(u))
        if (!bad && g.has_edge(w, v) && find_claw_at(g, w)) bad = true;
      if (bad) g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph random_pendant_root(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const int a = 2 + static_cast<int>(rng() % 4);
    const int b = 2 + static_cast<int>(rng() % 4);
    const double p = 0.5 + 0.5 * unit(rng);
    std::vector<VertexPair> es;
    int n = a + b;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (unit(rng) < p) es.push_back({i, a + j});
    const int hubs = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < hubs; ++t) {
      const int v = static_cast<int>(rng() % (a + b));
      const int k = 2 + static_cast<int>(rng() % 3);
      for (int q = 0; q < k; ++q) es.push_back({v, n++});
    }
    SimpleGraph h = SimpleGraph::from_edges(n, es);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (h.degree(v) > 0) keep.push_back(v);
    h = induced_subgraph(h, keep).graph;
    if (is_connected(h) && h.edge_count() >= 6) return h;
  }
}

SimpleGraph split_clique_preimage(const SimpleGraph& root, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LineGraph lg = line_graph(root);
  SimpleGraph g = lg.graph;
  for (Vertex v = 0; v < root.vertex_count(); ++v) {
    std::vector<Vertex> inner, pendant;
    for (Vertex e = 0; e < static_cast<Vertex>(lg.edge_of.size()); ++e) {
      const auto [x, y] = lg.edge_of[e];
      if (x != v && y != v) continue;
      (root.degree(x == v ? y : x) == 1 ? pendant : inner).push_back(e);
    }
    if (pendant.size() < 2 || inner.size() < 2 || rng() % 2) continue;
    std::shuffle(inner.begin(), inner.end(), rng);
    const std::size_t cut = 1 + rng() % (inner.size() - 1);
    for (std::size_t i = 0; i < cut; ++i)
      for (std::size_t j = cut; j < inner.size(); ++j) g.remove_edge(inner[i], inner[j]);
  }
  return g;
}

}  // namespace clawham
