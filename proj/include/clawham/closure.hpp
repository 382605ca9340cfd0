#pragma once

// Local completion, Ryjáček's closure with a replayable trace, and the
// reverse walk that carries an induced net of cl(G) back to G.

#include <array>
#include <cstdint>
#include <vector>

#include "clawham/detect.hpp"
#include "clawham/graph.hpp"

namespace clawham {

struct ClosureStep {
  Vertex vertex;                   ///< eligible vertex completed at this step
  std::vector<VertexPair> added;   ///< edges joined, each (u, v) with u < v
};

/// G = G^0 -> G^1 -> ... -> G^l = cl(G), one full local completion per step.
struct ClosureTrace {
  SimpleGraph initial;
  SimpleGraph final;
  std::vector<ClosureStep> steps;

  /// Graph G^i (0 <= i <= steps.size()).
  SimpleGraph graph_at(std::size_t i) const;
  std::size_t edges_added() const;
};

/// Checks every trace invariant; throws Error(kInvalidInput) on the first
/// broken one.
void validate_trace(const ClosureTrace& trace);

/// Makes N(x) a clique. Requires x to be locally connected.
SimpleGraph local_completion(const SimpleGraph& g, Vertex x);

enum class ClosureOrder {
  kLowestFirst,   ///< default, lowest eligible vertex id first
  kHighestFirst,
  kSeeded,        ///< uniformly random eligible vertex, driven by a seed
};

struct ClosureOptions {
  ClosureOrder order = ClosureOrder::kLowestFirst;
  std::uint64_t seed = 0;
};

/// cl(G) for claw-free G; throws Error(kPrecondition) when G has a claw.
ClosureTrace compute_closure(const SimpleGraph& g,
                             const ClosureOptions& opts = {});

/// Maximal clique of g containing all of `seed_vertices`; requires their
/// common neighbourhood to be a clique (which holds in closed claw-free graphs).
std::vector<Vertex> clique_containing(const SimpleGraph& g,
                                      std::span<const Vertex> seed_vertices);

/// R0 holds the triangle x1x2x3, R[j] the edge x_j y_j, all in trace.final.
struct NetCliques {
  std::vector<Vertex> r0;
  std::array<std::vector<Vertex>, 3> r;
};

NetCliques net_cliques(const SimpleGraph& closed, const NetWitness& net);

/// Walks the closure sequence backwards, returning an induced net of
/// trace.initial whose vertices stay inside the cliques of the given net.
NetWitness backtrace_net(const ClosureTrace& trace, const NetWitness& net,
                         const NetCliques& cliques);

}  // namespace clawham
