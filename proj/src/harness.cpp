#include "clawham/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <utility>

#include "clawham/closure.hpp"
#include "clawham/collapsible.hpp"
#include "clawham/conditions.hpp"
#include "clawham/detect.hpp"
#include "clawham/enumerate.hpp"
#include "clawham/generators.hpp"
#include "clawham/io.hpp"
#include "clawham/iso.hpp"
#include "clawham/linegraph.hpp"
#include "clawham/trails.hpp"

namespace clawham {

namespace {

struct ClaimName {
  Claim claim;
  const char* name;
};

constexpr ClaimName kClaimNames[] = {
    {Claim::kConjecture, "conjecture"},
    {Claim::kMinDegree, "min-degree"},
    {Claim::kNetFree, "net-free"},
    {Claim::kClosure, "closure"},
    {Claim::kRoot, "root"},
    {Claim::kHn, "hn"},
    {Claim::kFMember, "f-member"},
    {Claim::kNetBacktrace, "net-backtrace"},
    {Claim::kDctThrough, "dct-through"},
    {Claim::kHeavyEnds, "heavy-ends"},
    {Claim::kCollapsibleRest, "collapsible-rest"},
    {Claim::kK33, "k33"},
    {Claim::kMatchingSum, "matching-sum"},
    {Claim::kDichotomy, "dichotomy"},
    {Claim::kCatlin, "catlin"},
};

constexpr ClaimName kClaimAliases[] = {
    {Claim::kMinDegree, "mindegree"},
    {Claim::kNetFree, "netfree"},
    {Claim::kFMember, "brousek"},
    {Claim::kNetBacktrace, "lemma31"},
    {Claim::kDctThrough, "lemma32"},
    {Claim::kHeavyEnds, "cor33"},
    {Claim::kCollapsibleRest, "cor35"},
    {Claim::kK33, "lemma34"},
    {Claim::kMatchingSum, "lemma36"},
    {Claim::kDichotomy, "thm41"},
};

InstanceResult pass() { return {Verdict::kPass, {}}; }
InstanceResult vacuous() { return {Verdict::kVacuous, {}}; }
InstanceResult failed(std::string why) { return {Verdict::kFail, std::move(why)}; }
InstanceResult inconclusive(std::string why) { return {Verdict::kInconclusive, std::move(why)}; }

std::optional<SimpleGraph> as_simple(const Multigraph& h) {
  SimpleGraph g(h.vertex_count());
  for (const Edge& e : h.edges())
    if (!g.add_edge(e.u, e.v)) return std::nullopt;
  return g;
}

bool sorted_contains(const std::vector<Vertex>& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

std::string names(std::initializer_list<Vertex> vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

// Claw-free, 2-connected, order >= 3: the common ground of the
// hamiltonicity claims.
bool base_hypotheses(const SimpleGraph& g) {
  return g.vertex_count() >= 3 && is_claw_free(g) && is_2_connected(g);
}

InstanceResult expect_hamiltonian(const SimpleGraph& g, const TrailSearchOptions& search) {
  const auto c = hamiltonian_cycle(g, search);
  if (c.inconclusive()) return inconclusive("hamiltonian cycle search hit the budget");
  if (c.absent()) return failed("hypotheses hold but no hamiltonian cycle exists");
  if (!is_hamiltonian_cycle(g, *c.witness)) return failed("cycle witness does not verify");
  return pass();
}

InstanceResult check_conjecture(const SimpleGraph& g, const TrailSearchOptions& s) {
  if (!base_hypotheses(g) || !broersma_condition(g).ok) return vacuous();
  return expect_hamiltonian(g, s);
}

InstanceResult check_min_degree(const SimpleGraph& g, const TrailSearchOptions& s) {
  if (!base_hypotheses(g)) return vacuous();
  const ClassicalConditions c = classical_conditions(g);
  if (!c.min_degree_ok) return vacuous();
  if (!broersma_condition(g).ok) return failed("minimum degree holds but net endvertex degree fails");
  return expect_hamiltonian(g, s);
}

InstanceResult check_net_free(const SimpleGraph& g, const TrailSearchOptions& s) {
  if (!base_hypotheses(g) || !classical_conditions(g).net_free) return vacuous();
  return expect_hamiltonian(g, s);
}

InstanceResult check_closure(const SimpleGraph& g, const ClaimOptions& opts) {
  if (!is_claw_free(g)) return vacuous();
  const ClosureTrace low = compute_closure(g, {ClosureOrder::kLowestFirst, 0});
  const ClosureTrace high = compute_closure(g, {ClosureOrder::kHighestFirst, 0});
  const ClosureTrace rnd = compute_closure(g, {ClosureOrder::kSeeded, opts.seed});
  validate_trace(low);
  if (!(low.final == high.final) || !(low.final == rnd.final))
    return failed("closure depends on the completion order");
  if (!classify_locality(low.final).el.empty()) return failed("closure has an eligible vertex");
  if (!is_claw_free(low.final)) return failed("closure has a claw");
  const auto lc_g = classify_locality(g).lc;
  const auto lc_cl = classify_locality(low.final).lc;
  for (Vertex v : lc_g)
    if (!sorted_contains(lc_cl, v))
      return failed("vertex " + std::to_string(v) + " locally connected in g but not in closure");
  const TrailSearchOptions search{opts.budget};
  const auto hg = hamiltonian_cycle(g, search);
  const auto hc = hamiltonian_cycle(low.final, search);
  if (hg.inconclusive() || hc.inconclusive())
    return inconclusive("hamiltonian cycle search hit the budget");
  if (hg.found() != hc.found())
    return failed(std::string("g hamiltonian = ") + (hg.found() ? "yes" : "no") +
                  ", closure hamiltonian = " + (hc.found() ? "yes" : "no"));
  return pass();
}

InstanceResult check_root(const SimpleGraph& g) {
  if (!is_claw_free(g) || g.vertex_count() == 0) return vacuous();
  const ClosureTrace t = compute_closure(g);
  LineGraphRoot r;
  try {
    r = root_of_line_graph(t.final);
  } catch (const Error& e) {
    return failed(std::string("no root: ") + e.what());
  }
  if (!is_triangle_free(r.root)) return failed("root has a triangle");
  if (!verify_root(t.final, r)) return failed("line graph of root differs from closure");
  const LineGraph lg = line_graph(r.root);
  if (!are_isomorphic(lg.graph, t.final)) return failed("line graph of root not isomorphic");
  return pass();
}

InstanceResult check_hn(const SimpleGraph& h, const TrailSearchOptions& s) {
  if (h.edge_count() < 3 || !is_connected(h)) return vacuous();
  const auto lg = line_graph(h);
  const auto ham = hamiltonian_cycle(lg.graph, s);
  const auto dct = find_dct(Multigraph::from_simple(h), s);
  if (ham.inconclusive() || dct.inconclusive()) return inconclusive("search hit the budget");
  if (dct.found() && !is_dct(Multigraph::from_simple(h), *dct.witness))
    return failed("DCT witness does not verify");
  if (ham.found() != dct.found())
    return failed(std::string("line graph hamiltonian = ") + (ham.found() ? "yes" : "no") +
                  ", DCT " + (dct.found() ? "found" : "absent"));
  return pass();
}

InstanceResult check_f_member(const SimpleGraph& g, const TrailSearchOptions& s) {
  if (!base_hypotheses(g)) return vacuous();
  const auto c = hamiltonian_cycle(g, s);
  if (c.inconclusive()) return inconclusive("hamiltonian cycle search hit the budget");
  if (c.found()) return vacuous();
  const auto f = find_induced_F_member(g);
  if (f.inconclusive()) return inconclusive("F member search cut off");
  if (!f.found()) return failed("non-hamiltonian but no induced F member");
  if (!is_induced_F_member(g, *f.witness)) return failed("F witness does not verify");
  return pass();
}

InstanceResult check_net_backtrace(const SimpleGraph& g) {
  if (!is_claw_free(g)) return vacuous();
  const ClosureTrace t = compute_closure(g);
  const auto nets = find_induced_nets(t.final);
  if (nets.empty()) return vacuous();
  const auto lc = classify_locality(t.final).lc;
  auto in_lc = [&](const std::vector<Vertex>& clique, Vertex v) {
    return sorted_contains(clique, v) && sorted_contains(lc, v);
  };
  for (const NetWitness& net : nets) {
    const NetCliques cl = net_cliques(t.final, net);
    const NetWitness back = backtrace_net(t, net, cl);
    const std::string where = " for closure net x=" + names({net.x[0], net.x[1], net.x[2]});
    if (!is_induced_net(g, back)) return failed("back-traced net is not induced in g" + where);
    bool own_side = true;
    for (int j = 0; j < 3; ++j) {
      const Vertex x = back.x[j], y = back.y[j];
      if (x != net.x[j] && !in_lc(cl.r0, x))
        return failed("x" + std::to_string(j + 1) + " outside its set" + where);
      if (y != net.x[j] && y != net.y[j] && !in_lc(cl.r0, y) && !in_lc(cl.r[j], y))
        return failed("y" + std::to_string(j + 1) + " outside its set" + where);
      if (y != net.y[j] && !in_lc(cl.r[j], y)) own_side = false;
    }
    const bool triangle = g.has_edge(net.x[0], net.x[1]) && g.has_edge(net.x[1], net.x[2]) &&
                          g.has_edge(net.x[0], net.x[2]);
    if (triangle != own_side)
      return failed(std::string("triangle in g = ") + (triangle ? "yes" : "no") +
                    " but endvertices on own side = " + (own_side ? "yes" : "no") + where);
  }
  return pass();
}

bool essentially_2ec(const Multigraph& h) {
  return h.edge_count() > 0 && is_connected(h) && is_essentially_k_edge_connected(h, 2);
}

InstanceResult check_dct_through(const Multigraph& h, const TrailSearchOptions& s) {
  if (!essentially_2ec(h)) return vacuous();
  bool any = false;
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    const Vertex xs[] = {x};
    if (h.degree(x) < 2 || edges_avoiding(h, xs) > 3) continue;
    any = true;
    const auto t = find_dct_through(h, x, s);
    if (t.inconclusive()) return inconclusive("DCT search hit the budget");
    if (!t.found()) return failed("no DCT through vertex " + std::to_string(x));
    if (!is_dct(h, *t.witness) || !t.witness->contains(x))
      return failed("DCT witness through " + std::to_string(x) + " does not verify");
  }
  return any ? pass() : vacuous();
}

InstanceResult check_heavy_ends(const SimpleGraph& g) {
  if (!base_hypotheses(g) || !broersma_condition(g).ok) return vacuous();
  const ClosureTrace t = compute_closure(g);
  const LineGraphRoot root = root_of_line_graph(t.final);
  const auto claws = find_subdivided_claws(root.root);
  if (claws.empty()) return vacuous();
  for (const SubdividedClawWitness& lam : claws) {
    const SubdividedClawCertificate c = subdivided_claw_heavy_edges(g, root, lam);
    const std::string where = " for subdivided claw centred at " + std::to_string(lam.center);
    if (!is_induced_net(g, c.net_in_g)) return failed("net is not induced in g" + where);
    if (!c.all_ok()) return failed("certificate check failed" + where);
  }
  return pass();
}

InstanceResult check_collapsible_rest(const Multigraph& h, const TrailSearchOptions& s) {
  if (!essentially_2ec(h)) return vacuous();
  const int n = h.vertex_count();
  if (n > 20) return inconclusive("too many vertices for subset search");
  std::optional<std::vector<Vertex>> xi;
  for (std::uint32_t mask = 1; mask < (1u << n) && !xi; ++mask) {
    std::vector<Vertex> f;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) f.push_back(v);
    if (edges_avoiding(h, f) > 3) continue;
    const InducedMultigraph sub = induced_submultigraph(h, f);
    if (sub.graph.edge_count() > kCollapsibleEdgeCap) continue;
    if (collapsible_or_trivial(sub.graph)) xi = f;
  }
  if (!xi) return vacuous();
  const auto t = find_dct(h, s);
  if (t.inconclusive()) return inconclusive("DCT search hit the budget");
  if (!t.found()) return failed("collapsible subgraph with at most 3 avoiding edges but no DCT");
  if (!is_dct(h, *t.witness)) return failed("DCT witness does not verify");
  return pass();
}

InstanceResult check_k33(const SimpleGraph& g) {
  const bool full = are_isomorphic(g, named_small("k33"));
  const bool minus = are_isomorphic(g, named_small("k33_minus"));
  if (!full && !minus) return vacuous();
  const Multigraph h = Multigraph::from_simple(g);
  const CollapsibleResult r = is_collapsible(h);
  if (!r.collapsible()) return failed("not collapsible");
  if (r.witnesses.size() != (std::size_t{1} << (g.vertex_count() - 1)))
    return failed("missing parity witnesses");
  for (const auto& [mask, w] : r.witnesses)
    if (!is_parity_witness(h, w)) return failed("parity witness does not verify");
  return pass();
}

InstanceResult check_matching_sum(const SimpleGraph& h, const TrailSearchOptions& s) {
  if (h.edge_count() == 0 || !is_triangle_free(h) || !is_connected(h)) return vacuous();
  const Multigraph mh = Multigraph::from_simple(h);
  if (!is_essentially_k_edge_connected(mh, 2)) return vacuous();
  const auto dct = find_dct(mh, s);
  if (dct.inconclusive()) return inconclusive("DCT search hit the budget");
  if (dct.found()) return vacuous();
  const MatchingSumSummary sum = matching_sum_bound_all(h, s);
  if (sum.matchings == 0) return vacuous();
  if (sum.violations > 0) {
    const auto& m = *sum.first_violation;
    return failed("3-matching " + names({m[0].first, m[0].second}) + ", " +
                  names({m[1].first, m[1].second}) + ", " + names({m[2].first, m[2].second}) +
                  " exceeds |E|+1");
  }
  return pass();
}

InstanceResult check_dichotomy(const SimpleGraph& g, const TrailSearchOptions& s) {
  if (!base_hypotheses(g) || !broersma_condition(g).ok) return vacuous();
  const ClosureTrace t = compute_closure(g);
  const LineGraphRoot root = root_of_line_graph(t.final);
  const DichotomyResult d = main_dichotomy_check(root.root, s);
  // Edge ids as main_dichotomy_check numbers them.
  const Multigraph h = Multigraph::from_simple(root.root);
  switch (d.kind) {
    case DichotomyKind::kInconclusive:
      return inconclusive("DCT search hit the budget");
    case DichotomyKind::kViolation:
      return failed("root has neither a DCT nor a heavy 4-matching");
    case DichotomyKind::kHasDct:
      if (!d.trail || !is_dct(h, *d.trail)) return failed("DCT witness does not verify");
      return pass();
    case DichotomyKind::kHasHeavyMatching4:
      if (!d.matching || d.matching->edges.size() != 4) return failed("matching witness malformed");
      for (EdgeId e : d.matching->edges)
        if (!is_heavy(h, e)) return failed("matching edge " + std::to_string(e) + " not heavy");
      if (!d.size_bound_ok || !heavy_matching_size_bound_holds(h, *d.matching))
        return failed("heavy 4-matching in a root with more than 32 edges");
      return pass();
  }
  return failed("unknown dichotomy outcome");
}

InstanceResult check_catlin(const Multigraph& h, const TrailSearchOptions& s) {
  const int n = h.vertex_count();
  if (n < 3 || n > 16 || !is_connected(h)) return vacuous();
  const bool small = h.edge_count() <= kCollapsibleEdgeCap;
  std::optional<bool> whole;
  bool any = false;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<Vertex> f;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) f.push_back(v);
    const InducedMultigraph sub = induced_submultigraph(h, f);
    if (sub.graph.edge_count() > kCollapsibleEdgeCap) continue;
    if (!is_collapsible(sub.graph).collapsible()) continue;
    any = true;
    const Contraction c = contract(h, f);
    const auto t = find_dct_through(c.graph, c.merged, s);
    if (t.inconclusive()) return inconclusive("DCT search hit the budget");
    if (t.found()) {
      const ClosedTrail lifted = catlin_lift_dct(h, f, *t.witness);
      if (!is_dct(h, lifted)) return failed("lifted trail is not a DCT");
      for (Vertex v : f)
        if (!lifted.contains(v))
          return failed("lifted trail misses vertex " + std::to_string(v));
    }
    if (small && c.graph.vertex_count() >= 2 && is_collapsible(c.graph).collapsible()) {
      if (!whole) whole = is_collapsible(h).collapsible();
      if (!*whole) return failed("H[F] and H/F collapsible but H is not");
    }
  }
  return any ? pass() : vacuous();
}

std::uint64_t parse_count(std::string_view text, std::string_view source) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  require(ec == std::errc() && p == text.data() + text.size(), ErrorCode::kInvalidInput,
          "corpus '" + std::string(source) + "': bad number '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t c = s.find(':', pos);
    out.push_back(s.substr(pos, c == std::string_view::npos ? c : c - pos));
    if (c == std::string_view::npos) break;
    pos = c + 1;
  }
  return out;
}

std::vector<Multigraph> from_simple_all(const std::vector<SimpleGraph>& gs) {
  std::vector<Multigraph> out;
  out.reserve(gs.size());
  for (const SimpleGraph& g : gs) out.push_back(Multigraph::from_simple(g));
  return out;
}

std::vector<Multigraph> generated_corpus(std::string_view source, std::uint64_t seed) {
  const auto parts = split_colon(source);
  auto arity = [&](std::size_t k) {
    require(parts.size() == k, ErrorCode::kInvalidInput,
            "corpus '" + std::string(source) + "': wrong number of parameters");
  };
  const std::string_view kind = parts.size() > 1 ? parts[1] : "";
  std::vector<Multigraph> out;
  if (kind == "claw-free" || kind == "connected") {
    arity(3);
    const auto n = static_cast<int>(parse_count(parts[2], source));
    for (int k = 1; k <= n; ++k) {
      auto level = kind == "claw-free" ? enumerate_connected_claw_free(k) : enumerate_connected(k);
      for (auto& h : from_simple_all(level)) out.push_back(std::move(h));
    }
    return out;
  }
  if (kind == "triangle-free-edges" || kind == "graph-edges") {
    arity(3);
    const auto m = static_cast<int>(parse_count(parts[2], source));
    return from_simple_all(enumerate_by_edges(m, kind == "triangle-free-edges"));
  }
  if (kind == "multigraph-edges") {
    arity(3);
    return enumerate_multigraphs_by_edges(static_cast<int>(parse_count(parts[2], source)));
  }
  if (kind == "random-claw-free") {
    arity(4);
    const auto count = parse_count(parts[2], source);
    const auto nmax = parse_count(parts[3], source);
    require(nmax >= 1, ErrorCode::kInvalidInput, "random-claw-free needs N >= 1");
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t s = seed * 1000003 + i;
      const int n = 1 + static_cast<int>(s % nmax);
      const auto strategy = i % 2 ? RandomStrategy::kLineGraphThinned : RandomStrategy::kLineGraph;
      out.push_back(Multigraph::from_simple(random_claw_free(n, s, strategy)));
    }
    return out;
  }
  if (kind == "preimage") {
    arity(3);
    const auto count = parse_count(parts[2], source);
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t s = seed * 1000003 + i;
      out.push_back(Multigraph::from_simple(split_clique_preimage(random_pendant_root(s), s)));
    }
    return out;
  }
  fail(ErrorCode::kInvalidInput, "unknown corpus generator '" + std::string(source) + "'");
}

}  // namespace

Claim parse_claim(std::string_view name) {
  for (const auto& c : kClaimNames)
    if (name == c.name) return c.claim;
  for (const auto& c : kClaimAliases)
    if (name == c.name) return c.claim;
  std::string known;
  for (const auto& c : kClaimNames) known += std::string(known.empty() ? "" : ", ") + c.name;
  fail(ErrorCode::kInvalidInput, "unknown claim '" + std::string(name) + "' (known: " + known + ")");
}

const char* to_string(Claim c) {
  for (const auto& n : kClaimNames)
    if (n.claim == c) return n.name;
  return "?";
}

std::vector<Claim> all_claims() {
  std::vector<Claim> out;
  for (const auto& c : kClaimNames) out.push_back(c.claim);
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kVacuous: return "vacuous";
    case Verdict::kFail: return "fail";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

InstanceResult check_claim(Claim claim, const Multigraph& h, const ClaimOptions& opts) {
  const TrailSearchOptions s{opts.budget};
  switch (claim) {
    case Claim::kDctThrough: return check_dct_through(h, s);
    case Claim::kCollapsibleRest: return check_collapsible_rest(h, s);
    case Claim::kCatlin: return check_catlin(h, s);
    default: break;
  }
  const auto g = as_simple(h);
  if (!g) return vacuous();
  try {
    switch (claim) {
      case Claim::kConjecture: return check_conjecture(*g, s);
      case Claim::kMinDegree: return check_min_degree(*g, s);
      case Claim::kNetFree: return check_net_free(*g, s);
      case Claim::kClosure: return check_closure(*g, opts);
      case Claim::kRoot: return check_root(*g);
      case Claim::kHn: return check_hn(*g, s);
      case Claim::kFMember: return check_f_member(*g, s);
      case Claim::kNetBacktrace: return check_net_backtrace(*g);
      case Claim::kHeavyEnds: return check_heavy_ends(*g);
      case Claim::kK33: return check_k33(*g);
      case Claim::kMatchingSum: return check_matching_sum(*g, s);
      case Claim::kDichotomy: return check_dichotomy(*g, s);
      default: break;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInconclusive) return inconclusive(e.what());
    return failed(std::string(to_string(e.code())) + ": " + e.what());
  }
  return vacuous();
}

std::vector<Multigraph> load_corpus(std::string_view source, std::size_t limit,
                                    std::uint64_t seed) {
  std::vector<Multigraph> out;
  if (source.starts_with("gen:")) {
    out = generated_corpus(source, seed);
  } else {
    std::vector<SimpleGraph> gs;
    if (source == "-") {
      gs = read_graph6_corpus(std::cin, limit);
    } else {
      std::ifstream in{std::string(source)};
      require(in.good(), ErrorCode::kInvalidInput, "cannot open corpus '" + std::string(source) + "'");
      gs = read_graph6_corpus(in, limit);
    }
    out = from_simple_all(gs);
  }
  if (limit && out.size() > limit) out.resize(limit);
  return out;
}

int VerifySummary::exit_code() const {
  if (fail) return 2;
  if (inconclusive) return 3;
  return 0;
}

VerifySummary verify_corpus(Claim claim, const std::vector<Multigraph>& corpus,
                            const VerifyOptions& opts) {
  std::vector<InstanceResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      try {
        results[i] = check_claim(claim, corpus[i], opts.claim);
      } catch (const Error& e) {
        results[i] = e.code() == ErrorCode::kInconclusive
                         ? inconclusive(e.what())
                         : failed(std::string(to_string(e.code())) + ": " + e.what());
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, 64));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerifySummary s;
  s.claim = claim;
  s.instances = corpus.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    switch (results[i].verdict) {
      case Verdict::kPass: ++s.pass; break;
      case Verdict::kVacuous: ++s.vacuous; break;
      case Verdict::kInconclusive:
        ++s.inconclusive;
        if (!s.first_inconclusive_index) s.first_inconclusive_index = i;
        break;
      case Verdict::kFail: {
        ++s.fail;
        auto size = [&](std::size_t k) {
          return std::pair(corpus[k].vertex_count(), corpus[k].edge_count());
        };
        if (!s.counterexample_index || size(i) < size(*s.counterexample_index))
          s.counterexample_index = i;
        break;
      }
    }
  }
  if (s.counterexample_index) {
    s.counterexample = corpus[*s.counterexample_index];
    s.counterexample_detail = results[*s.counterexample_index].detail;
    if (!opts.counterexample_path.empty()) {
      std::ofstream out(opts.counterexample_path);
      require(out.good(), ErrorCode::kInvalidInput,
              "cannot write counterexample to '" + opts.counterexample_path + "'");
      out << "# claim " << to_string(claim) << ", corpus index " << *s.counterexample_index
          << ": " << s.counterexample_detail << '\n'
          << to_edge_list(*s.counterexample);
    }
  }
  return s;
}

const std::vector<std::string>& self_audit_checklist() {
  static const std::vector<std::string> items = {
      "re-run the counterexample alone with a larger --budget",
      "check that the input parsed to the intended graph (round-trip it through gen/edge list)",
      "recompute each hypothesis on the counterexample by hand or with an independent tool",
      "validate every witness the report prints with the independent checkers",
      "compare closure results under lowest-first, highest-first and seeded orders",
      "only then treat the instance as a counterexample to the stated claim",
  };
  return items;
}

Json to_json(const VerifySummary& s) {
  Json j{{"schema", kSchema},
         {"claim", to_string(s.claim)},
         {"instances", s.instances},
         {"pass", s.pass},
         {"vacuous", s.vacuous},
         {"fail", s.fail},
         {"inconclusive", s.inconclusive}};
  if (s.first_inconclusive_index) j["first_inconclusive_index"] = *s.first_inconclusive_index;
  if (s.counterexample) {
    j["counterexample"] = Json{{"index", *s.counterexample_index},
                               {"detail", s.counterexample_detail},
                               {"graph", to_json(*s.counterexample)}};
    j["self_audit"] = self_audit_checklist();
  }
  return j;
}

}  // namespace clawham
