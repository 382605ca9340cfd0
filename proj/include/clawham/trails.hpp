#pragma once

// Closed trails, dominating closed trails (DCTs), and the exact Hamiltonian
// cycle oracle.

#include <cstdint>
#include <optional>
#include <vector>

#include "clawham/graph.hpp"
#include "clawham/search.hpp"

namespace clawham {

/// Closed walk without repeated edges. vertices.front() == vertices.back()
/// and vertices.size() == edges.size() + 1; a single vertex with no edges is
/// a valid trail.
struct ClosedTrail {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  static ClosedTrail single(Vertex v) { return {{v}, {}}; }
  /// Distinct vertices on the trail, sorted.
  std::vector<Vertex> vertex_set() const;
  bool contains(Vertex v) const;
};

/// Throws Error(kInvalidInput) unless t is a closed trail of h.
void validate_trail(const Multigraph& h, const ClosedTrail& t);
bool is_closed_trail(const Multigraph& h, const ClosedTrail& t);

/// Every edge of h has an endpoint on t. Throws if t is not a trail of h.
bool dominates(const Multigraph& h, const ClosedTrail& t);
bool is_dct(const Multigraph& h, const ClosedTrail& t);

/// Euler tour of the sub-multigraph formed by `edge_ids`, which must be
/// connected with all degrees even. Starts at the lowest vertex and takes the
/// lowest edge id first.
ClosedTrail euler_tour(const Multigraph& h, std::span<const EdgeId> edge_ids);

struct TrailSearchOptions {
  std::uint64_t budget = kDefaultBudget;
};

SearchResult<ClosedTrail> find_dct(const Multigraph& h,
                                   const TrailSearchOptions& opts = {});
/// A DCT whose vertex set contains x.
SearchResult<ClosedTrail> find_dct_through(const Multigraph& h, Vertex x,
                                           const TrailSearchOptions& opts = {});
/// A DCT whose vertex set contains every vertex of `required`.
SearchResult<ClosedTrail> find_dct_containing(
    const Multigraph& h, std::span<const Vertex> required,
    const TrailSearchOptions& opts = {});

/// Cyclic vertex order; the closing edge back to the first vertex is implied.
using HamiltonianCycle = std::vector<Vertex>;

SearchResult<HamiltonianCycle> hamiltonian_cycle(
    const SimpleGraph& g, const TrailSearchOptions& opts = {});
bool is_hamiltonian_cycle(const SimpleGraph& g, const HamiltonianCycle& c);

/// Harary–Nash-Williams cross-check on a simple graph with >= 3 edges:
/// L(h) is hamiltonian iff h has a DCT. Returns the shared answer; throws
/// Error(kInternal) if the two searches disagree and Error(kInconclusive)
/// if either runs out of budget.
bool hn_check(const SimpleGraph& h, const TrailSearchOptions& opts = {});

}  // namespace clawham
