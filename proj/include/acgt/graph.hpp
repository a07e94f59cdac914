#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acgt/bigint.hpp"
#include "acgt/error.hpp"

namespace acgt {

using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on vertices 0..n-1. Edges are stored once,
// normalized to u < v and sorted; optional positive rational weights are
// parallel to the edge array. Immutable once constructed.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n, std::vector<Edge> edges = {},
                 std::vector<std::string> labels = {})
      : Graph(n, std::move(edges), {}, std::move(labels)) {}

  Graph(std::size_t n, std::vector<Edge> edges,
        std::vector<BigRational> weights, std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n_)
      throw Error(Errc::invalid_parameter, "label count differs from vertex count");
    if (!weights.empty() && weights.size() != edges.size())
      throw Error(Errc::invalid_parameter, "weight count differs from edge count");

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (auto& e : edges) {
      if (e.u == e.v)
        throw Error(Errc::invalid_parameter,
                    "self-loop at vertex " + std::to_string(e.u));
      if (e.u >= n_ || e.v >= n_)
        throw Error(Errc::invalid_parameter,
                    "edge endpoint out of range: " + std::to_string(e.u) + " " +
                        std::to_string(e.v));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });

    edges_.reserve(edges.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Edge& e = edges[order[k]];
      if (!edges_.empty() && edges_.back() == e)
        throw Error(Errc::invalid_parameter, "duplicate edge " +
                                                 std::to_string(e.u) + " " +
                                                 std::to_string(e.v));
      edges_.push_back(e);
    }
    if (!weights.empty()) {
      weights_.reserve(weights.size());
      for (std::size_t idx : order) {
        if (weights[idx] <= 0)
          throw Error(Errc::invalid_parameter, "edge weights must be positive");
        weights_.push_back(std::move(weights[idx]));
      }
    }

    adjacency_.assign(n_, {});
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  bool weighted() const noexcept { return !weights_.empty(); }

  // Weight of the i-th edge in edges(); unit weight for unweighted graphs.
  BigRational weight(std::size_t edge_index) const {
    if (weights_.empty()) return BigRational(1);
    return weights_.at(edge_index);
  }

  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<BigRational>& weights() const noexcept { return weights_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<BigRational> weights_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Incremental construction; build() runs the checked Graph constructor.
class GraphBuilder {
 public:
  Vertex add_vertex(std::string label = {}) {
    labels_.push_back(std::move(label));
    return labels_.size() - 1;
  }

  Vertex add_vertices(std::size_t count) {
    Vertex first = labels_.size();
    labels_.resize(labels_.size() + count);
    return first;
  }

  void add_edge(Vertex u, Vertex v) { edges_.push_back({u, v}); }

  void add_path(std::initializer_list<Vertex> path) {
    for (auto it = path.begin(); it + 1 < path.end(); ++it) add_edge(*it, *(it + 1));
  }

  std::size_t vertex_count() const noexcept { return labels_.size(); }

  void set_label(Vertex v, std::string label) { labels_.at(v) = std::move(label); }

  Graph build(bool keep_labels = true) && {
    std::size_t n = labels_.size();
    bool any_label = std::any_of(labels_.begin(), labels_.end(),
                                 [](const std::string& s) { return !s.empty(); });
    return Graph(n, std::move(edges_),
                 keep_labels && any_label ? std::move(labels_)
                                          : std::vector<std::string>{});
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

inline std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> result(g.order());
  for (Vertex v = 0; v < g.order(); ++v) result[v] = g.degree(v);
  return result;
}

inline bool is_k_regular(const Graph& g, std::size_t k) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == g.order();
}

// Image of g under the vertex map v -> perm[v]. Labels and weights travel
// with their vertices and edges.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order())
    throw Error(Errc::invalid_parameter, "permutation size mismatch");
  std::vector<char> hit(g.order(), 0);
  for (Vertex image : perm) {
    if (image >= g.order() || hit[image])
      throw Error(Errc::invalid_parameter, "not a permutation");
    hit[image] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) labels[perm[v]] = g.labels()[v];
  }
  return Graph(g.order(), std::move(edges), g.weights(), std::move(labels));
}

}  // namespace acgt
