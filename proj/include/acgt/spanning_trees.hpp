#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "acgt/bigint.hpp"
#include "acgt/distance.hpp"
#include "acgt/error.hpp"
#include "acgt/graph.hpp"
#include "acgt/isomorphism.hpp"

namespace acgt {

// Fraction-free (Bareiss) determinant; the matrix is consumed.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Matrix-tree theorem: determinant of the Laplacian with the last row and
// column removed. Weights are ignored; a disconnected graph has 0 trees.
inline BigInt spanning_tree_count(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (n == 1) return 1;
  std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1, 0));
  for (const auto& e : g.edges()) {
    if (e.u < n - 1) minor[e.u][e.u] += 1;
    if (e.v < n - 1) minor[e.v][e.v] += 1;
    if (e.u < n - 1 && e.v < n - 1) {
      minor[e.u][e.v] -= 1;
      minor[e.v][e.u] -= 1;
    }
  }
  return bareiss_determinant(std::move(minor));
}

struct CensusLimits {
  std::size_t max_vertices = 12;
  std::size_t max_edges = 20;
};

struct TreeClass {
  Graph representative;  // first tree of the class in enumeration order
  BigInt multiplicity;
  BigInt wiener;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  std::size_t parent(std::size_t x) const { return parent_[x]; }
  void set_parent(std::size_t x, std::size_t p) { parent_[x] = p; }

 private:
  std::vector<std::size_t> parent_;
};

// Deletion/contraction over the edge list. Contracting edge i merges its
// endpoints' components; deleting it is allowed only while the remaining
// edges can still span the graph.
class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, std::function<void(const std::vector<std::size_t>&)> emit)
      : g_(g), emit_(std::move(emit)), sets_(g.order()) {}

  void run() {
    if (g_.order() == 0) return;
    components_ = g_.order();
    recurse(0);
  }

 private:
  bool still_spannable(std::size_t from) const {
    // Union of current contractions with all not-yet-decided edges.
    DisjointSets probe = sets_;
    std::size_t comps = components_;
    auto edges = g_.edges();
    for (std::size_t i = from; i < edges.size() && comps > 1; ++i) {
      auto a = probe.find(edges[i].u), b = probe.find(edges[i].v);
      if (a != b) {
        probe.set_parent(a, b);
        --comps;
      }
    }
    return comps == 1;
  }

  void recurse(std::size_t i) {
    if (components_ == 1) {
      emit_(chosen_);
      return;
    }
    auto edges = g_.edges();
    if (i == edges.size()) return;
    auto a = sets_.find(edges[i].u), b = sets_.find(edges[i].v);
    if (a != b) {
      sets_.set_parent(a, b);
      --components_;
      chosen_.push_back(i);
      recurse(i + 1);
      chosen_.pop_back();
      ++components_;
      sets_.set_parent(a, a);
    }
    if (still_spannable(i + 1)) recurse(i + 1);
  }

  const Graph& g_;
  std::function<void(const std::vector<std::size_t>&)> emit_;
  DisjointSets sets_;
  std::size_t components_ = 0;
  std::vector<std::size_t> chosen_;
};

// Isomorphism-invariant key: sorted degrees plus the distance census.
using TreeFingerprint = std::tuple<std::vector<std::size_t>, std::map<std::uint64_t, BigInt>>;

inline TreeFingerprint fingerprint(const Graph& tree) {
  auto d = degrees(tree);
  std::sort(d.begin(), d.end());
  return {std::move(d), hosoya_wiener(tree).coefficients()};
}

}  // namespace detail

// Calls visit(tree) for every spanning tree of g (weights dropped), in a
// deterministic order.
template <class Visitor>
void for_each_spanning_tree(const Graph& g, Visitor&& visit) {
  auto edges = g.edges();
  detail::TreeEnumerator enumerator(g, [&](const std::vector<std::size_t>& chosen) {
    std::vector<Edge> tree_edges;
    tree_edges.reserve(chosen.size());
    for (auto i : chosen) tree_edges.push_back(edges[i]);
    visit(Graph(g.order(), std::move(tree_edges)));
  });
  enumerator.run();
}

// All spanning trees grouped into isomorphism classes. Classes are ordered
// by Wiener index, then by the representative's edge list.
inline std::vector<TreeClass> spanning_tree_census(const Graph& g, CensusLimits limits = {}) {
  if (!is_connected(g) || g.order() == 0)
    throw Error(Errc::disconnected_graph, "spanning tree census needs a connected graph");
  if (g.order() > limits.max_vertices || g.size() > limits.max_edges)
    throw Error(Errc::size_limit_exceeded,
                "census limited to " + std::to_string(limits.max_vertices) + " vertices / " +
                    std::to_string(limits.max_edges) + " edges");

  std::map<detail::TreeFingerprint, std::vector<std::size_t>> buckets;
  std::vector<TreeClass> classes;
  for_each_spanning_tree(g, [&](Graph tree) {
    auto& bucket = buckets[detail::fingerprint(tree)];
    for (auto idx : bucket)
      if (are_isomorphic(classes[idx].representative, tree)) {
        classes[idx].multiplicity += 1;
        return;
      }
    bucket.push_back(classes.size());
    BigInt w = wiener(tree);
    classes.push_back({std::move(tree), BigInt(1), std::move(w)});
  });

  std::stable_sort(classes.begin(), classes.end(), [](const TreeClass& a, const TreeClass& b) {
    if (a.wiener != b.wiener) return a.wiener < b.wiener;
    auto ea = a.representative.edges(), eb = b.representative.edges();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  });
  return classes;
}

}  // namespace acgt
