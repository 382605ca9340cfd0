#pragma once

// Collapsibility, Catlin's contraction/lifting, and reduction by known
// collapsible certificates.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clawham/graph.hpp"
#include "clawham/search.hpp"
#include "clawham/trails.hpp"

namespace clawham {

/// Spanning connected edge set whose odd-degree vertices are exactly `demand`.
struct SpanningParityWitness {
  std::vector<Vertex> demand;
  std::vector<EdgeId> subgraph;
};

/// Largest edge count the subset enumeration accepts.
inline constexpr int kCollapsibleEdgeCap = 20;

struct CollapsibleResult {
  SearchStatus status = SearchStatus::kAbsent;  ///< kFound = collapsible
  /// On success: one witness per even subset S, keyed by S's bitmask.
  std::map<std::uint64_t, SpanningParityWitness> witnesses;
  /// On failure: an even S with no witness.
  std::vector<Vertex> failing_demand;

  bool collapsible() const { return status == SearchStatus::kFound; }
};

/// Brute force over edge subsets in increasing size. |V| >= 2 required;
/// more than kCollapsibleEdgeCap edges gives kInconclusive.
CollapsibleResult is_collapsible(const Multigraph& h);

/// Single vertices count as collapsible; otherwise as is_collapsible.
bool collapsible_or_trivial(const Multigraph& h);

/// Smallest witness for one demand set; `demand` must have even size.
std::optional<SpanningParityWitness> parity_witness(
    const Multigraph& h, std::span<const Vertex> demand);

/// Independent check of a witness against h and its demand set.
bool is_parity_witness(const Multigraph& h, const SpanningParityWitness& w);

/// Lifts a DCT of H/F through v_F to a DCT of H containing F. Requires H[F]
/// collapsible (or |F| = 1) and contracted_dct a DCT of contract(h, f)
/// passing through v_F, with vertices numbered as contract() numbers them.
ClosedTrail catlin_lift_dct(const Multigraph& h, std::span<const Vertex> f,
                            const ClosedTrail& contracted_dct);

/// is_collapsible(H/F) for collapsible H[F]; confirms at desk scale that a
/// positive answer carries over to H.
bool catlin_collapsible_compose(const Multigraph& h, std::span<const Vertex> f);

enum class Certificate { kTwoCycle, kThreeCycle, kK33Minus, kK33 };
const char* to_string(Certificate c);

struct ReductionStep {
  Certificate certificate;
  Multigraph before;
  std::vector<Vertex> contracted;  ///< vertices of `before`
  Vertex merged;                   ///< v_F in the next graph
};

struct Reduction {
  Multigraph reduced;
  std::vector<ReductionStep> log;
};

/// Contracts 2-cycles, 3-cycles and K3,3(-) subgraphs until none is left.
Reduction reduce_by_certificates(const Multigraph& h);

/// Vertices of `reduction.reduced` that stand for contracted certificates.
/// A DCT of the original exists iff the reduced graph has one through all
/// of them.
std::vector<Vertex> merged_vertices(const Reduction& reduction);

/// Lifts a DCT of `reduction.reduced` back to the original multigraph. The
/// trail must pass through every merged vertex it is lifted through.
ClosedTrail lift_through_reduction(const Reduction& reduction,
                                   const ClosedTrail& reduced_dct);

}  // namespace clawham
