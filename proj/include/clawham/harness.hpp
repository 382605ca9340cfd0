#pragma once

// Claim checkers replayed over corpora of graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clawham/graph.hpp"
#include "clawham/report.hpp"

namespace clawham {

enum class Claim {
  kConjecture,       ///< 2-connected claw-free + net endvertex degrees => hamiltonian
  kMinDegree,        ///< 2-connected claw-free + min degree => hamiltonian
  kNetFree,          ///< 2-connected claw-free net-free => hamiltonian
  kClosure,          ///< closure unique, stable, preserves hamiltonicity
  kRoot,             ///< closure is the line graph of a triangle-free root
  kHn,               ///< L(h) hamiltonian iff h has a DCT
  kFMember,          ///< non-hamiltonian 2-connected claw-free has an induced F member
  kNetBacktrace,     ///< nets of the closure trace back to nets of g
  kDctThrough,       ///< DCT through x when few edges avoid x
  kHeavyEnds,        ///< heavy-edge certificates for subdivided claws of the root
  kCollapsibleRest,  ///< collapsible subgraph with few avoiding edges => DCT
  kK33,              ///< K3,3 and K3,3 minus an edge are collapsible
  kMatchingSum,      ///< edge-degree sum over a 3-matching without DCT
  kDichotomy,        ///< DCT or heavy 4-matching in the root
  kCatlin,           ///< lifting and composing through collapsible subgraphs
};

Claim parse_claim(std::string_view name);
const char* to_string(Claim c);
std::vector<Claim> all_claims();

enum class Verdict { kPass, kVacuous, kFail, kInconclusive };
const char* to_string(Verdict v);

struct InstanceResult {
  Verdict verdict = Verdict::kVacuous;
  std::string detail;  ///< why it failed or was inconclusive
};

struct ClaimOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
};

/// Checks one claim on one instance. Claims about simple graphs treat
/// instances with parallel edges as vacuous.
InstanceResult check_claim(Claim claim, const Multigraph& h, const ClaimOptions& opts = {});

/// Loads a corpus. `source` is a graph6 file path, "-" for stdin, or one of
///   gen:claw-free:N             connected claw-free graphs on 1..N vertices
///   gen:connected:N             connected graphs on 1..N vertices
///   gen:triangle-free-edges:M   connected triangle-free graphs, 1..M edges
///   gen:graph-edges:M           connected simple graphs, 1..M edges
///   gen:multigraph-edges:M      connected multigraphs, 1..M edges
///   gen:random-claw-free:C:N    C seeded claw-free graphs on up to N vertices
///   gen:preimage:C              C seeded graphs whose closure is non-trivial
std::vector<Multigraph> load_corpus(std::string_view source, std::size_t limit = 0,
                                    std::uint64_t seed = 0);

struct VerifyOptions {
  ClaimOptions claim;
  unsigned threads = 1;
  std::string counterexample_path;  ///< written on failure when non-empty
};

struct VerifySummary {
  Claim claim;
  std::size_t instances = 0;
  std::size_t pass = 0;
  std::size_t vacuous = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
  /// Smallest failing instance (fewest vertices, then edges, then index).
  std::optional<std::size_t> counterexample_index;
  std::optional<Multigraph> counterexample;
  std::string counterexample_detail;
  std::optional<std::size_t> first_inconclusive_index;

  /// 0 all passed, 2 some failure, 3 only inconclusive results left.
  int exit_code() const;
};

VerifySummary verify_corpus(Claim claim, const std::vector<Multigraph>& corpus,
                            const VerifyOptions& opts = {});

/// Steps to rule out a fault in this tool before trusting a failure.
const std::vector<std::string>& self_audit_checklist();

Json to_json(const VerifySummary& s);

}  // namespace clawham
