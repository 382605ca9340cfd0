#pragma once

// Isomorphism testing and deduplication for small graphs and multigraphs.
// Both are handled as symmetric matrices of edge multiplicities.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "clawham/graph.hpp"

namespace clawham {

struct AdjMatrix {
  int n = 0;
  std::vector<std::uint8_t> w;  ///< row-major n x n multiplicities

  std::uint8_t at(int u, int v) const { return w[static_cast<std::size_t>(u) * n + v]; }
  std::uint8_t& at(int u, int v) { return w[static_cast<std::size_t>(u) * n + v]; }

  static AdjMatrix of(const SimpleGraph& g);
  static AdjMatrix of(const Multigraph& h);

  friend bool operator==(const AdjMatrix&, const AdjMatrix&) = default;
};

/// Stable vertex colouring by iterated neighbourhood refinement.
std::vector<std::uint64_t> refined_colors(const AdjMatrix& a);

/// Isomorphism-invariant 64-bit hash.
std::uint64_t invariant_hash(const AdjMatrix& a);

/// Exact test by backtracking over colour-compatible vertex maps.
bool are_isomorphic(const AdjMatrix& a, const AdjMatrix& b);
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// Keeps one representative per isomorphism class.
class IsoDedup {
 public:
  /// Returns true if `a` was not isomorphic to anything inserted so far.
  bool insert(const AdjMatrix& a);
  std::size_t size() const { return count_; }

 private:
  std::unordered_map<std::uint64_t, std::vector<AdjMatrix>> buckets_;
  std::size_t count_ = 0;
};

}  // namespace clawham
