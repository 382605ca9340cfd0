#pragma once

// Simple graphs and loop-free multigraphs with stable edge identities.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "clawham/error.hpp"

namespace clawham {

using Vertex = int;
using EdgeId = int;
using VertexPair = std::pair<Vertex, Vertex>;

/// Finite undirected graph without loops or parallel edges on vertices
/// 0..vertex_count()-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count);

  static SimpleGraph from_edges(int vertex_count,
                                std::span<const VertexPair> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;

  /// Adds uv; returns false if it was already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  std::vector<Vertex> neighbors(Vertex v) const;
  /// All edges as (u, v) with u < v, lexicographically ordered.
  std::vector<VertexPair> edges() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> degree_;
};

struct Edge {
  EdgeId id;
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return u == w || v == w; }
};

/// Loop-free multigraph. Edge ids are assigned in allocation order and are
/// preserved by contraction, so a trail of H/F can be read back in H.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  /// Edge ids follow SimpleGraph::edges() order.
  static Multigraph from_simple(const SimpleGraph& g);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  EdgeId add_edge(Vertex u, Vertex v);
  /// Inserts an edge under a caller-chosen id, which must be unused.
  void add_edge_with_id(EdgeId id, Vertex u, Vertex v);

  /// Edges sorted by id.
  std::span<const Edge> edges() const { return edges_; }
  bool has_edge_id(EdgeId id) const;
  const Edge& edge(EdgeId id) const;

  int degree(Vertex v) const;
  int multiplicity(Vertex u, Vertex v) const;
  std::vector<EdgeId> incident(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  void check_vertex(Vertex v) const;

 private:
  int n_ = 0;
  EdgeId next_id_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
};

std::vector<Vertex> neighbors(const SimpleGraph& g, Vertex v);

struct InducedSubgraph {
  SimpleGraph graph;
  /// original[i] is the vertex of the parent graph relabelled to i.
  std::vector<Vertex> original;
};

/// G[U]; U is sorted and deduplicated before relabelling.
InducedSubgraph induced_subgraph(const SimpleGraph& g,
                                 std::span<const Vertex> u);

/// N^e(x): edges other than x sharing an endpoint with x.
std::vector<EdgeId> edge_neighborhood(const Multigraph& h, EdgeId x);
int edge_degree(const Multigraph& h, EdgeId x);

/// l(v): edges vw with d(w) = 1.
std::vector<EdgeId> pendant_edges(const Multigraph& h, Vertex v);
/// V_1(H).
std::vector<Vertex> degree_one_vertices(const Multigraph& h);

struct Contraction {
  Multigraph graph;
  Vertex merged;  ///< v_F
  /// vertex_map[v] is the image of v in the contracted graph.
  std::vector<Vertex> vertex_map;
};

/// H/F: vertices outside F keep their relative order, v_F is appended last.
Contraction contract(const Multigraph& h, std::span<const Vertex> f);

/// H[F] keeping the edge ids of H; vertices relabelled in sorted order.
struct InducedMultigraph {
  Multigraph graph;
  std::vector<Vertex> original;
};
InducedMultigraph induced_submultigraph(const Multigraph& h,
                                        std::span<const Vertex> f);

/// Number of edges of H - X (edges with no endpoint in X).
int edges_avoiding(const Multigraph& h, std::span<const Vertex> x);

bool is_triangle_free(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool is_2_connected(const SimpleGraph& g);
bool is_connected(const Multigraph& h);

/// At most one edge-containing component after deleting any < k edges.
/// Requires a connected input and 1 <= k <= 4.
bool is_essentially_k_edge_connected(const Multigraph& h, int k);

}  // namespace clawham
