#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "acgt/bigint.hpp"
#include "acgt/error.hpp"
#include "acgt/graph.hpp"

namespace acgt {

// Dense all-pairs distances; std::nullopt marks an unreachable pair.
template <class T>
class DistanceMatrix {
 public:
  using value_type = T;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n) {
    for (std::size_t v = 0; v < n; ++v) d_[v * n + v] = T(0);
  }

  std::size_t order() const noexcept { return n_; }

  const std::optional<T>& at(Vertex u, Vertex v) const { return d_.at(u * n_ + v); }
  std::optional<T>& at(Vertex u, Vertex v) { return d_.at(u * n_ + v); }

  bool reachable(Vertex u, Vertex v) const { return at(u, v).has_value(); }

  // Largest finite distance; nullopt on a disconnected matrix.
  std::optional<T> diameter() const {
    T best = T(0);
    for (const auto& entry : d_) {
      if (!entry) return std::nullopt;
      if (*entry > best) best = *entry;
    }
    return best;
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::optional<T>> d_;
};

using HopMatrix = DistanceMatrix<std::uint64_t>;
using WeightedMatrix = DistanceMatrix<BigRational>;

namespace detail {

// Hop distances from one source; -1 marks unreachable.
inline void bfs_from(const Graph& g, Vertex source, std::vector<std::int64_t>& dist,
                     std::vector<Vertex>& queue) {
  dist.assign(g.order(), -1);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
}

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g))
    throw Error(Errc::disconnected_graph, std::string(what) + " is undefined on a disconnected graph");
}

inline void require_unweighted(const Graph& g, const char* what) {
  if (g.weighted())
    throw Error(Errc::invalid_parameter, std::string(what) + " expects an unweighted graph");
}

}  // namespace detail

// Edge-count distances. Edge weights, if any, are ignored.
inline HopMatrix all_pairs_bfs(const Graph& g) {
  HopMatrix m(g.order());
  std::vector<std::int64_t> dist;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    detail::bfs_from(g, s, dist, queue);
    for (Vertex t = 0; t < g.order(); ++t)
      if (dist[t] >= 0) m.at(s, t) = static_cast<std::uint64_t>(dist[t]);
  }
  return m;
}

// Exact shortest paths under rational edge weights (unit weights when the
// graph is unweighted). Cubic; meant for graphs with at most a few hundred
// vertices.
inline WeightedMatrix all_pairs_floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  WeightedMatrix m(n);
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    BigRational w = g.weight(i);
    m.at(edges[i].u, edges[i].v) = w;
    m.at(edges[i].v, edges[i].u) = w;
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i) {
      const auto& ik = m.at(i, k);
      if (!ik) continue;
      BigRational via_k = *ik;
      for (Vertex j = 0; j < n; ++j) {
        const auto& kj = m.at(k, j);
        if (!kj) continue;
        BigRational candidate = via_k + *kj;
        auto& ij = m.at(i, j);
        if (!ij || candidate < *ij) ij = std::move(candidate);
      }
    }
  return m;
}

inline WeightedMatrix to_weighted(const HopMatrix& hops) {
  WeightedMatrix m(hops.order());
  for (Vertex u = 0; u < hops.order(); ++u)
    for (Vertex v = 0; v < hops.order(); ++v)
      if (auto d = hops.at(u, v)) m.at(u, v) = BigRational(*d);
      else m.at(u, v).reset();
  return m;
}

// Sum over unordered pairs; throws disconnected-graph on an unreachable pair.
template <class T>
BigRational wiener_of(const DistanceMatrix<T>& m) {
  BigRational total = 0;
  for (Vertex u = 0; u < m.order(); ++u)
    for (Vertex v = u + 1; v < m.order(); ++v) {
      const auto& d = m.at(u, v);
      if (!d) throw Error(Errc::disconnected_graph, "unreachable pair in distance matrix");
      total += BigRational(*d);
    }
  return total;
}

// Wiener index of an unweighted connected graph, computed with one BFS per
// vertex (no dense matrix).
inline BigInt wiener(const Graph& g) {
  detail::require_unweighted(g, "wiener");
  detail::require_connected(g, "Wiener index");
  BigInt total = 0;
  std::vector<std::int64_t> dist;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    detail::bfs_from(g, s, dist, queue);
    std::uint64_t row = 0;
    for (Vertex t = s + 1; t < g.order(); ++t) row += static_cast<std::uint64_t>(dist[t]);
    total += row;
  }
  return total;
}

// Weighted Wiener index via Floyd-Warshall; unit weights if unweighted.
inline BigRational weighted_wiener(const Graph& g) {
  detail::require_connected(g, "Wiener index");
  return wiener_of(all_pairs_floyd_warshall(g));
}

// Coefficient c_d counts unordered vertex pairs at distance exactly d >= 1.
class HosoyaWienerPolynomial {
 public:
  HosoyaWienerPolynomial() = default;
  explicit HosoyaWienerPolynomial(std::map<std::uint64_t, BigInt> coeffs)
      : coeffs_(std::move(coeffs)) {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
  }

  const std::map<std::uint64_t, BigInt>& coefficients() const noexcept { return coeffs_; }

  BigInt coefficient(std::uint64_t d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  std::uint64_t degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  // H'(1) = sum d * c_d, the Wiener index.
  BigInt derivative_at_one() const {
    BigInt total = 0;
    for (const auto& [d, c] : coeffs_) total += c * d;
    return total;
  }

  // H(1) = number of unordered pairs.
  BigInt value_at_one() const {
    BigInt total = 0;
    for (const auto& [d, c] : coeffs_) total += c;
    return total;
  }

  // "15 t + 30 t^2"; "0" for the zero polynomial.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += c.str() + " t";
      if (d != 1) out += "^" + std::to_string(d);
    }
    return out;
  }

  friend bool operator==(const HosoyaWienerPolynomial&, const HosoyaWienerPolynomial&) = default;

 private:
  std::map<std::uint64_t, BigInt> coeffs_;
};

inline HosoyaWienerPolynomial hosoya_wiener(const Graph& g) {
  detail::require_unweighted(g, "hosoya_wiener");
  detail::require_connected(g, "Hosoya-Wiener polynomial");
  std::vector<std::uint64_t> census;
  std::vector<std::int64_t> dist;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    detail::bfs_from(g, s, dist, queue);
    for (Vertex t = s + 1; t < g.order(); ++t) {
      auto d = static_cast<std::size_t>(dist[t]);
      if (census.size() <= d) census.resize(d + 1, 0);
      ++census[d];
    }
  }
  std::map<std::uint64_t, BigInt> coeffs;
  for (std::size_t d = 1; d < census.size(); ++d)
    if (census[d]) coeffs.emplace(d, BigInt(census[d]));
  return HosoyaWienerPolynomial(std::move(coeffs));
}

}  // namespace acgt
