#pragma once

// Degree thresholds, heavy edges and matchings, and the structural
// certificates built on top of them. All thresholds are compared exactly in
// integers: ed(e) >= (m - 2) / 3 is evaluated as 3 * ed(e) >= m - 2.

#include <array>
#include <optional>
#include <vector>

#include "clawham/closure.hpp"
#include "clawham/detect.hpp"
#include "clawham/graph.hpp"
#include "clawham/linegraph.hpp"
#include "clawham/trails.hpp"

namespace clawham {

/// Exact fraction num/den, den > 0.
struct Fraction {
  long long num;
  long long den;

  friend bool operator<=(const Fraction& a, const Fraction& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return b <= a; }
};

/// (count - 2) / 3.
inline Fraction third_threshold(int count) { return {count - 2, 3}; }
inline bool at_least_threshold(int value, int count) {
  return Fraction{value, 1} >= third_threshold(count);
}

/// Heavy: ed(e) >= (|E(H)| - 2) / 3, with |E(H)| counted in h.
bool is_heavy(const Multigraph& h, EdgeId e);

struct HeavyMatching {
  std::vector<EdgeId> edges;  ///< ascending ids
  Fraction threshold;         ///< (|E(H)| - 2) / 3
};

/// A heavy matching of exactly k edges, lowest ids first, or nullopt.
std::optional<HeavyMatching> find_heavy_matching(const Multigraph& h, int k);

/// Counting step used for graphs of order >= 33: a triangle-free graph with a
/// heavy matching of size 4 has at most 32 edges.
bool heavy_matching_size_bound_holds(const Multigraph& h, const HeavyMatching& m);

struct BroersmaResult {
  bool ok = true;
  std::optional<NetWitness> net;     ///< violating net on failure
  std::optional<Vertex> endvertex;   ///< its low-degree endvertex
};

/// Every endvertex of every induced net has degree >= (n - 2) / 3, n = |V(g)|.
BroersmaResult broersma_condition(const SimpleGraph& g);

struct ClassicalConditions {
  bool min_degree_ok;  ///< delta(G) >= (n - 2) / 3
  bool net_free;
};
ClassicalConditions classical_conditions(const SimpleGraph& g);

/// Sum of edge degrees over a 3-matching is at most |E(h)| + 1, for
/// triangle-free, essentially 2-edge-connected h without a DCT. Throws
/// Error(kPrecondition) if h breaks a hypothesis or m is not a matching.
bool matching_sum_bound_check(const SimpleGraph& h,
                              const std::array<VertexPair, 3>& m,
                              const TrailSearchOptions& opts = {});

struct MatchingSumSummary {
  int matchings = 0;   ///< 3-matchings examined
  int violations = 0;
  std::optional<std::array<VertexPair, 3>> first_violation;
};

/// Runs matching_sum_bound_check over every 3-matching. A graph without a
/// 3-matching passes vacuously before any hypothesis is evaluated.
MatchingSumSummary matching_sum_bound_all(const SimpleGraph& h,
                                          const TrailSearchOptions& opts = {});

/// One arm of the heavy-edge certificate for a subdivided claw of the root.
struct ArmCertificate {
  Vertex x_prime;          ///< vertex of G (= edge of H)
  Vertex y_prime;
  int edge_degree;         ///< ed_H(y')
  bool heavy;
  bool x_location_ok;      ///< x' in {x_i} ∪ l_H(R0)
  bool y_location_ok;      ///< y' in {y_i, x_i} ∪ l_H(R_i) ∪ l_H(R0)
  bool boosted;            ///< y' in {x_i} ∪ l_H(R0)
  int j_size;              ///< |J| when boosted
  bool boost_ok;           ///< 3 ed(y') >= |E| - 2 + 3 (2 + |J|) when boosted
  bool on_own_side;        ///< y' in {y_i} ∪ l_H(R_i)
};

struct SubdividedClawCertificate {
  NetWitness net_in_closure;  ///< L(Λ) inside cl(G)
  NetWitness net_in_g;        ///< after back-tracing through the closure
  std::array<ArmCertificate, 3> arms;
  bool triangle_in_g;  ///< the closure net's x1 x2 x3 is a triangle of G
  bool triangle_equivalence_ok;

  bool all_ok() const;
};

/// Locates the three heavy endvertices of an induced net of G that the root's
/// subdivided claw `lam` gives rise to. `lam` need not be induced: its line
/// graph is an induced net of cl(g) either way. `root` must be the root of
/// cl(g).
SubdividedClawCertificate subdivided_claw_heavy_edges(
    const SimpleGraph& g, const LineGraphRoot& root,
    const SubdividedClawWitness& lam);

enum class DichotomyKind { kHasDct, kHasHeavyMatching4, kViolation, kInconclusive };
const char* to_string(DichotomyKind k);

struct DichotomyResult {
  DichotomyKind kind;
  std::optional<ClosedTrail> trail;
  std::optional<HeavyMatching> matching;
  /// For a matching: whether the 4-matching size bound |E(h)| <= 32 holds.
  bool size_bound_ok = true;
};

/// DCT first, then a heavy 4-matching; neither is reported as kViolation.
DichotomyResult main_dichotomy_check(const SimpleGraph& h,
                                     const TrailSearchOptions& opts = {});

}  // namespace clawham
