#include "clawham/iso.hpp"

#include <algorithm>
#include <numeric>

namespace clawham {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t v) {
  return mix(seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

}  // namespace

AdjMatrix AdjMatrix::of(const SimpleGraph& g) {
  AdjMatrix a;
  a.n = g.vertex_count();
  a.w.assign(static_cast<std::size_t>(a.n) * a.n, 0);
  for (auto [u, v] : g.edges()) a.at(u, v) = a.at(v, u) = 1;
  return a;
}

AdjMatrix AdjMatrix::of(const Multigraph& h) {
  AdjMatrix a;
  a.n = h.vertex_count();
  a.w.assign(static_cast<std::size_t>(a.n) * a.n, 0);
  for (const Edge& e : h.edges()) {
    ++a.at(e.u, e.v);
    ++a.at(e.v, e.u);
  }
  return a;
}

std::vector<std::uint64_t> refined_colors(const AdjMatrix& a) {
  const int n = a.n;
  std::vector<std::uint64_t> color(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t deg = 0, distinct = 0;
    for (int u = 0; u < n; ++u) {
      deg += a.at(v, u);
      distinct += a.at(v, u) != 0;
    }
    color[v] = combine(mix(deg), distinct);
  }
  auto classes = [](std::vector<std::uint64_t> c) {
    std::sort(c.begin(), c.end());
    return std::unique(c.begin(), c.end()) - c.begin();
  };
  auto count = classes(color);
  std::vector<std::uint64_t> next(n), nb;
  for (int round = 0; round < n; ++round) {
    for (int v = 0; v < n; ++v) {
      nb.clear();
      for (int u = 0; u < n; ++u)
        if (a.at(v, u)) nb.push_back(combine(color[u], a.at(v, u)));
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = color[v];
      for (auto x : nb) h = combine(h, x);
      next[v] = h;
    }
    color.swap(next);
    const auto c = classes(color);
    if (c == count) break;
    count = c;
  }
  return color;
}

std::uint64_t invariant_hash(const AdjMatrix& a) {
  auto c = refined_colors(a);
  std::sort(c.begin(), c.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(a.n));
  for (auto x : c) h = combine(h, x);
  return h;
}

namespace {

// Maps vertices of a (in `order`) to colour-equal vertices of b, checking
// multiplicities against every vertex already mapped.
class IsoSearch {
 public:
  IsoSearch(const AdjMatrix& a, const AdjMatrix& b,
            std::vector<std::uint64_t> ca, std::vector<std::uint64_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(a.n, -1), used_(a.n, false) {
    // Rarest colours first, then stay adjacent to what is mapped.
    std::vector<int> freq(a.n);
    for (int v = 0; v < a.n; ++v)
      freq[v] = static_cast<int>(std::count(ca_.begin(), ca_.end(), ca_[v]));
    std::vector<bool> placed(a.n, false);
    while (static_cast<int>(order_.size()) < a.n) {
      int best = -1, best_links = -1;
      for (int v = 0; v < a.n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : order_) links += a.at(v, u) != 0;
        if (best < 0 || links > best_links ||
            (links == best_links && freq[v] < freq[best])) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int t = 0; t < b_.n; ++t) {
      if (used_[t] || cb_[t] != ca_[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int u = order_[k];
        ok = a_.at(v, u) == b_.at(t, map_[u]);
      }
      if (!ok) continue;
      map_[v] = t;
      used_[t] = true;
      if (run(depth + 1)) return true;
      used_[t] = false;
      map_[v] = -1;
    }
    return false;
  }

 private:
  const AdjMatrix& a_;
  const AdjMatrix& b_;
  std::vector<std::uint64_t> ca_, cb_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> order_;
};

}  // namespace

bool are_isomorphic(const AdjMatrix& a, const AdjMatrix& b) {
  if (a.n != b.n) return false;
  auto ca = refined_colors(a);
  auto cb = refined_colors(b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return IsoSearch(a, b, std::move(ca), std::move(cb)).run();
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return are_isomorphic(AdjMatrix::of(a), AdjMatrix::of(b));
}

bool IsoDedup::insert(const AdjMatrix& a) {
  auto& bucket = buckets_[invariant_hash(a)];
  for (const AdjMatrix& r : bucket)
    if (are_isomorphic(r, a)) return false;
  bucket.push_back(a);
  ++count_;
  return true;
}

}  // namespace clawham
