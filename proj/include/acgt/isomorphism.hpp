#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "acgt/graph.hpp"

namespace acgt {

namespace detail {

using Coloring = std::vector<std::size_t>;

// One round of joint colour refinement: a vertex's new colour is the rank of
// (old colour, sorted neighbour colours) among all signatures from both
// graphs, so equal colours mean the same thing on either side.
inline std::pair<Coloring, Coloring> refine(const Graph& g1, const Coloring& c1,
                                            const Graph& g2, const Coloring& c2) {
  using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
  auto signature = [](const Graph& g, const Coloring& c, Vertex v) {
    Signature s{c[v], {}};
    for (Vertex w : g.neighbors(v)) s.second.push_back(c[w]);
    std::sort(s.second.begin(), s.second.end());
    return s;
  };
  std::vector<Signature> s1, s2;
  for (Vertex v = 0; v < g1.order(); ++v) s1.push_back(signature(g1, c1, v));
  for (Vertex v = 0; v < g2.order(); ++v) s2.push_back(signature(g2, c2, v));

  std::map<Signature, std::size_t> rank;
  for (const auto& s : s1) rank.emplace(s, 0);
  for (const auto& s : s2) rank.emplace(s, 0);
  std::size_t next = 0;
  for (auto& [sig, id] : rank) id = next++;

  Coloring n1(g1.order()), n2(g2.order());
  for (Vertex v = 0; v < g1.order(); ++v) n1[v] = rank.at(s1[v]);
  for (Vertex v = 0; v < g2.order(); ++v) n2[v] = rank.at(s2[v]);
  return {std::move(n1), std::move(n2)};
}

inline std::vector<std::size_t> histogram(const Coloring& c, std::size_t classes) {
  std::vector<std::size_t> h(classes, 0);
  for (auto x : c) ++h[x];
  return h;
}

inline std::size_t class_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2, Coloring c1, Coloring c2)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)),
        map_(g1.order(), kUnmapped), used_(g2.order(), 0) {
    // Visit order: start at a vertex of the rarest colour, then grow
    // breadth-first so every step is constrained by mapped neighbours.
    auto h = histogram(c1_, std::max(class_count(c1_), class_count(c2_)));
    std::vector<char> placed(g1.order(), 0);
    while (order_.size() < g1.order()) {
      Vertex start = kUnmapped;
      for (Vertex v = 0; v < g1.order(); ++v)
        if (!placed[v] && (start == kUnmapped || h[c1_[v]] < h[c1_[start]])) start = v;
      placed[start] = 1;
      std::size_t head = order_.size();
      order_.push_back(start);
      while (head < order_.size()) {
        Vertex v = order_[head++];
        for (Vertex w : g1.neighbors(v))
          if (!placed[w]) {
            placed[w] = 1;
            order_.push_back(w);
          }
      }
    }
  }

  bool run() { return extend(0); }

 private:
  static constexpr Vertex kUnmapped = static_cast<Vertex>(-1);

  bool consistent(Vertex u, Vertex x) const {
    // Every mapped neighbour of u must land on a neighbour of x, and the
    // number of mapped neighbours must agree on both sides.
    std::size_t mapped_nbrs = 0;
    for (Vertex w : g1_.neighbors(u)) {
      if (map_[w] == kUnmapped) continue;
      ++mapped_nbrs;
      if (!g2_.has_edge(x, map_[w])) return false;
    }
    std::size_t image_nbrs = 0;
    for (Vertex y : g2_.neighbors(x))
      if (used_[y]) ++image_nbrs;
    return mapped_nbrs == image_nbrs;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex u = order_[depth];
    for (Vertex x = 0; x < g2_.order(); ++x) {
      if (used_[x] || c2_[x] != c1_[u] || !consistent(u, x)) continue;
      map_[u] = x;
      used_[x] = 1;
      if (extend(depth + 1)) return true;
      map_[u] = kUnmapped;
      used_[x] = 0;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  Coloring c1_, c2_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

}  // namespace detail

// Exact isomorphism test on the underlying simple graphs (labels and
// weights are ignored). Colour refinement prunes candidates; the final
// answer always comes from an explicit backtracking search.
inline bool are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  auto d1 = degrees(g1);
  auto d2 = degrees(g2);
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  detail::Coloring c1(d1.begin(), d1.end()), c2(d2.begin(), d2.end());
  std::size_t classes = 0;
  while (true) {
    auto [n1, n2] = detail::refine(g1, c1, g2, c2);
    std::size_t k = std::max(detail::class_count(n1), detail::class_count(n2));
    if (detail::histogram(n1, k) != detail::histogram(n2, k)) return false;
    c1 = std::move(n1);
    c2 = std::move(n2);
    if (k == classes) break;
    classes = k;
  }
  return detail::Matcher(g1, g2, std::move(c1), std::move(c2)).run();
}

}  // namespace acgt
