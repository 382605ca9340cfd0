#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clawham/graph.hpp"

namespace clawham {

struct LineGraph {
  SimpleGraph graph;
  /// edge_of[v] is the edge of the source graph that vertex v stands for.
  std::vector<VertexPair> edge_of;
};

/// L(h); vertex i is the i-th edge of h.edges().
LineGraph line_graph(const SimpleGraph& h);

/// Triangle-free H with L(H) = G. Root vertices 0..cliques.size()-1 are the
/// Krausz cliques of G; the remaining root vertices are pendant endpoints,
/// one per vertex of G lying in a single clique.
struct LineGraphRoot {
  SimpleGraph root;
  /// vertex_to_edge[v] = endpoints (in root) of the edge standing for v.
  std::vector<VertexPair> vertex_to_edge;
  /// cliques[c] lists the vertices of G forming the clique of root vertex c.
  std::vector<std::vector<Vertex>> cliques;

  /// The root as a multigraph whose edge id equals the vertex of G.
  Multigraph as_multigraph() const;
  /// Vertex of G whose edge joins root vertices a and b, if any.
  std::optional<Vertex> vertex_for(Vertex a, Vertex b) const;
};

/// Inverts the line graph via the Krausz partition. Throws
/// Error(kInvalidInput) naming the offending vertex or clique pair when g is
/// not the line graph of a triangle-free simple graph.
LineGraphRoot root_of_line_graph(const SimpleGraph& g);

/// Whether line_graph(root.root) equals g under root.vertex_to_edge.
bool verify_root(const SimpleGraph& g, const LineGraphRoot& root);

/// All maximal cliques, each sorted, in lexicographic order.
std::vector<std::vector<Vertex>> maximal_cliques(const SimpleGraph& g);

}  // namespace clawham
