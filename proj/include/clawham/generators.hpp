#pragma once

// Named graph families and seeded random claw-free graphs.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "clawham/detect.hpp"
#include "clawham/graph.hpp"

namespace clawham {

/// Three cliques B_1..B_3 of order m; in B_i the vertices i*m, i*m+1, i*m+2
/// are x_i, y_i, z_i. Adds x_i x_j and y_i y_j for all i != j.
SimpleGraph sharpness_graph(int m);

inline Vertex sharpness_x(int m, int i) { return i * m; }
inline Vertex sharpness_y(int m, int i) { return i * m + 1; }
inline Vertex sharpness_z(int m, int i) { return i * m + 2; }

struct ConnectorSpec {
  ConnectorKind kind = ConnectorKind::kPath;
  int length = 2;  ///< edges on the path; ignored for triangles
};

struct FSpec {
  std::array<ConnectorSpec, 3> connectors;
};

/// Parses "p2,p3,t" style specs.
FSpec parse_fspec(std::string_view text);
std::string format_fspec(const FSpec& spec);

struct FMember {
  SimpleGraph graph;
  FWitness witness;  ///< a_i = i, b_i = 3 + i, connectors numbered after
};

/// Member of Brousek's family: triangles a1a2a3 and b1b2b3, each a_i joined
/// to b_i by a path of the given length or by a triangle a_i b_i c_i.
FMember brousek_F(const FSpec& spec);

/// Names: net, subdivided_claw, claw, k33, k33_minus, petersen, cycle,
/// path, complete. `size` is the vertex count for the last three.
/// Labelling: net has triangle 0,1,2 with pendants 3,4,5 (i+3 on i);
/// subdivided_claw has center 0, inner 1..3, outer 4..6; claw has center 0;
/// k33 has sides {0,1,2} and {3,4,5}, k33_minus drops 2-5.
SimpleGraph named_small(std::string_view name, int size = 0);

enum class RandomStrategy {
  kLineGraph,           ///< line graph of a random triangle-free graph
  kLineGraphThinned,    ///< then random edge deletions keeping it claw-free
};

/// Connected claw-free graph on n vertices (n >= 1), deterministic per seed.
SimpleGraph random_claw_free(int n, std::uint64_t seed, RandomStrategy strategy);

/// Random connected triangle-free simple graph with exactly m edges (m >= 1).
SimpleGraph random_triangle_free(int m, std::uint64_t seed);

/// Random connected triangle-free root: a dense random bipartite graph with a
/// few vertices carrying 2-4 pendant edges. At least 6 edges.
SimpleGraph random_pendant_root(std::uint64_t seed);

/// A claw-free G with cl(G) = L(root). At a random subset of root vertices
/// with at least two pendant edges, the other edges are split into two
/// groups and the line-graph edges between the groups are deleted; completing
/// a pendant vertex restores them. Vertex v of G is edge v of root.edges().
SimpleGraph split_clique_preimage(const SimpleGraph& root, std::uint64_t seed);

/// Relabels g by the permutation perm (vertex v becomes perm[v]).
SimpleGraph relabel(const SimpleGraph& g, const std::vector<Vertex>& perm);

}  // namespace clawham
