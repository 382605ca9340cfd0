#pragma once

// Induced claws, nets, subdivided claws, local connectivity, and members of
// Brousek's family F.

#include <array>
#include <optional>
#include <vector>

#include "clawham/graph.hpp"
#include "clawham/search.hpp"

namespace clawham {

struct ClawWitness {
  Vertex center;
  std::array<Vertex, 3> leaves;  // sorted
};

/// Induced net: triangle x1x2x3 with pendant neighbours y_i of x_i.
/// Canonical form has x sorted ascending, y following its x.
struct NetWitness {
  std::array<Vertex, 3> x;
  std::array<Vertex, 3> y;

  friend bool operator==(const NetWitness&, const NetWitness&) = default;
};

/// Subdivided claw: center - inner[i] - outer[i]; arms sorted by inner.
struct SubdividedClawWitness {
  Vertex center;
  std::array<Vertex, 3> inner;
  std::array<Vertex, 3> outer;

  friend bool operator==(const SubdividedClawWitness&,
                         const SubdividedClawWitness&) = default;
};

struct LocalityClass {
  std::vector<Vertex> lc;  ///< locally connected
  std::vector<Vertex> ld;  ///< locally disconnected
  std::vector<Vertex> el;  ///< eligible: locally connected, N(v) not a clique
};

std::optional<ClawWitness> find_claw(const SimpleGraph& g);
inline bool is_claw_free(const SimpleGraph& g) { return !find_claw(g); }
/// Claws using vertex v (as center or leaf).
std::optional<ClawWitness> find_claw_at(const SimpleGraph& g, Vertex v);

std::vector<NetWitness> find_induced_nets(const SimpleGraph& g);
/// True iff the six vertices induce exactly the net with the given roles.
bool is_induced_net(const SimpleGraph& g, const NetWitness& net);

std::vector<SubdividedClawWitness> find_induced_subdivided_claws(
    const SimpleGraph& h);
bool is_induced_subdivided_claw(const SimpleGraph& h,
                                const SubdividedClawWitness& w);

/// Subdivided claws as subgraphs, extra edges among the seven vertices
/// allowed. Stops after `limit` witnesses when limit > 0.
std::vector<SubdividedClawWitness> find_subdivided_claws(const SimpleGraph& h,
                                                         std::size_t limit = 0);
bool is_subdivided_claw(const SimpleGraph& h, const SubdividedClawWitness& w);

/// G[N(v)] connected. An isolated vertex counts as locally connected.
bool is_locally_connected(const SimpleGraph& g, Vertex v);
bool neighborhood_is_clique(const SimpleGraph& g, Vertex v);
LocalityClass classify_locality(const SimpleGraph& g);

// --- Brousek's family -------------------------------------------------------

enum class ConnectorKind { kPath, kTriangle };

/// How a_i is joined to b_i. A path connector lists its interior vertices
/// from a_i towards b_i (length = interior + 1 >= 2). A triangle connector has
/// a_i b_i adjacent plus one apex vertex.
struct Connector {
  ConnectorKind kind;
  std::vector<Vertex> interior;
};

struct FWitness {
  std::array<Vertex, 3> a;
  std::array<Vertex, 3> b;
  std::array<Connector, 3> connectors;

  std::vector<Vertex> vertices() const;
};

struct FSearchOptions {
  /// Longest path connector (in edges) considered; <= 0 means |V(g)|.
  int connector_cap = 0;
};

/// kFound with an induced F member, kAbsent when none exists, kInconclusive
/// when no witness was found but the connector cap cut off some path.
SearchResult<FWitness> find_induced_F_member(const SimpleGraph& g,
                                             const FSearchOptions& opts = {});

/// Independent check that the witness vertices induce exactly the F member.
bool is_induced_F_member(const SimpleGraph& g, const FWitness& w);

}  // namespace clawham
