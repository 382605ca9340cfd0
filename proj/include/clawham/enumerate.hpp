#pragma once

// Exhaustive generation of small graphs up to isomorphism.
//
// Every connected graph has a vertex whose removal leaves it connected, so
// the classes below are grown one vertex at a time from their own members on
// one vertex fewer, deduplicating each level. This is complete for any class
// closed under deleting such a vertex: all connected graphs, connected
// claw-free graphs, and connected triangle-free graphs or multigraphs with an
// edge budget.

#include <functional>
#include <vector>

#include "clawham/graph.hpp"

namespace clawham {

/// Largest order enumerate_connected accepts without a corpus file.
inline constexpr int kConnectedCap = 8;
/// Largest order enumerate_connected_claw_free accepts.
inline constexpr int kClawFreeCap = 10;

using GraphFilter = std::function<bool(const SimpleGraph&)>;

/// All connected graphs on n vertices (1 <= n <= kConnectedCap) up to
/// isomorphism that pass `filter`. Larger n throws Error(kInvalidInput)
/// asking for a graph6 corpus.
std::vector<SimpleGraph> enumerate_connected(int n, const GraphFilter& filter = {});

/// Connected claw-free graphs on n vertices (1 <= n <= kClawFreeCap).
std::vector<SimpleGraph> enumerate_connected_claw_free(int n,
                                                       const GraphFilter& filter = {});

/// Connected simple graphs with 1..max_edges edges, optionally only
/// triangle-free ones, ordered by edge count then vertex count.
std::vector<SimpleGraph> enumerate_by_edges(int max_edges, bool triangle_free);

/// Connected loopless multigraphs with 1..max_edges edges, same order.
std::vector<Multigraph> enumerate_multigraphs_by_edges(int max_edges);

}  // namespace clawham
