#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "acgt/error.hpp"
#include "acgt/graph.hpp"

namespace acgt {

enum class Family {
  complete,
  complete_bipartite,
  cycle,
  star,
  ladder,
  hypercube,
  wheel,
  gear,
  petersen,
  odd,
  fibonacci_tree,
  block,
  extended_block,
  gk_open,
  gk_closed,
};

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;
  // Inclusive parameter range, applied to every parameter.
  std::int64_t min;
  std::int64_t max;
};

// Upper bounds keep every instance below roughly a million vertices.
inline constexpr std::array<FamilyInfo, 15> kFamilies{{
    {Family::complete, "complete", 1, 1, 1024},
    {Family::complete_bipartite, "complete-bipartite", 2, 1, 1024},
    {Family::cycle, "cycle", 1, 3, 1 << 20},
    {Family::star, "star", 1, 1, 1 << 20},
    {Family::ladder, "ladder", 1, 1, 1 << 19},
    {Family::hypercube, "hypercube", 1, 1, 20},
    {Family::wheel, "wheel", 1, 4, 1 << 20},
    {Family::gear, "gear", 1, 4, 1 << 19},
    {Family::petersen, "petersen", 0, 0, 0},
    {Family::odd, "odd", 1, 2, 10},
    {Family::fibonacci_tree, "fibonacci-tree", 1, 1, 25},
    {Family::block, "block", 1, 1, 15},
    {Family::extended_block, "extended-block", 1, 1, 14},
    {Family::gk_open, "gk-open", 1, 1, 1 << 14},
    {Family::gk_closed, "gk-closed", 1, 1, 1 << 14},
}};

inline const FamilyInfo& family_info(Family f) {
  for (const auto& info : kFamilies)
    if (info.family == f) return info;
  throw Error(Errc::invalid_parameter, "unknown family");
}

inline Family parse_family(std::string_view name) {
  for (const auto& info : kFamilies)
    if (info.name == name) return info.family;
  throw Error(Errc::invalid_parameter, "unknown family '" + std::string(name) + "'");
}

struct FamilySpec {
  Family family = Family::complete;
  std::vector<std::int64_t> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline void validate(const FamilySpec& spec) {
  const auto& info = family_info(spec.family);
  if (spec.params.size() != info.arity)
    throw Error(Errc::invalid_parameter,
                std::string(info.name) + " takes " + std::to_string(info.arity) +
                    " parameter(s), got " + std::to_string(spec.params.size()));
  for (auto p : spec.params)
    if (p < info.min || p > info.max)
      throw Error(Errc::invalid_parameter,
                  std::string(info.name) + " parameter " + std::to_string(p) +
                      " outside [" + std::to_string(info.min) + ", " +
                      std::to_string(info.max) + "]");
}

// "wheel:5", "complete-bipartite:3,4", "petersen".
inline std::string to_string(const FamilySpec& spec) {
  std::string out(family_info(spec.family).name);
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

// Parameters given as "3,4" or as separate tokens by the caller.
inline std::vector<std::int64_t> parse_params(std::string_view text) {
  std::vector<std::int64_t> params;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(pos, comma - pos);
    bool neg = !field.empty() && field.front() == '-';
    auto digits = neg ? field.substr(1) : field;
    if (!detail::all_digits(digits) || digits.size() > 12)
      throw Error(Errc::invalid_parameter, "bad parameter '" + std::string(field) + "'");
    auto value = static_cast<std::int64_t>(std::stoll(std::string(digits)));
    params.push_back(neg ? -value : value);
    pos = comma + 1;
  }
  return params;
}

inline FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  FamilySpec spec;
  spec.family = parse_family(text.substr(0, colon));
  if (colon != std::string_view::npos) spec.params = parse_params(text.substr(colon + 1));
  validate(spec);
  return spec;
}

// ---------------------------------------------------------------------------
// Standard families. Vertex numbering is part of the contract: edge-list
// exports must be identical across runs and builds.
// ---------------------------------------------------------------------------

// K_n on 0..n-1.
inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

// K_{m,n}: left side 0..m-1, right side m..m+n-1.
inline Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(m * n);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) edges.push_back({u, m + v});
  return Graph(m + n, std::move(edges));
}

// C_m: i ~ i+1 (mod m).
inline Graph cycle_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
  return Graph(m, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

// S_n = K_{1,n}: centre 0, leaves 1..n.
inline Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) edges.push_back({0, i});
  return Graph(n + 1, std::move(edges));
}

// L_n = P_n x K_2: rails 0..n-1 and n..2n-1, rungs i ~ n+i.
inline Graph ladder_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
    edges.push_back({n + i, n + i + 1});
  }
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, n + i});
  return Graph(2 * n, std::move(edges));
}

// Q_n: vertex i is the binary word i; words at Hamming distance 1 adjacent.
inline Graph hypercube_graph(std::size_t n) {
  std::size_t count = std::size_t{1} << n;
  std::vector<Edge> edges;
  edges.reserve(count * n / 2);
  for (Vertex w = 0; w < count; ++w)
    for (std::size_t bit = 0; bit < n; ++bit) {
      Vertex x = w ^ (std::size_t{1} << bit);
      if (w < x) edges.push_back({w, x});
    }
  return Graph(count, std::move(edges));
}

// W_n = C_{n-1} + hub: hub 0, rim 1..n-1 in cyclic order.
inline Graph wheel_graph(std::size_t n) {
  std::size_t rim = n - 1;
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= rim; ++i) {
    edges.push_back({0, i});
    edges.push_back({i, i % rim + 1});
  }
  return Graph(n, std::move(edges));
}

// Gear graph: wheel(n) with rim edge (i, i+1) subdivided by vertex n-1+i.
inline Graph gear_graph(std::size_t n) {
  std::size_t rim = n - 1;
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= rim; ++i) {
    Vertex mid = rim + i;
    edges.push_back({0, i});
    edges.push_back({i, mid});
    edges.push_back({mid, i % rim + 1});
  }
  return Graph(n + rim, std::move(edges));
}

// Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram i+5 ~ (i+2 mod 5)+5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, std::move(edges));
}

// O_n: one vertex per (n-1)-subset of {1..2n-1}, listed in lexicographic
// order; disjoint subsets are adjacent. Labels spell the subset, e.g. "{1,3}".
inline Graph odd_graph(std::size_t n) {
  const std::size_t ground = 2 * n - 1;
  const std::size_t k = n - 1;
  std::vector<std::uint32_t> masks;
  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (auto e : combo) mask |= std::uint32_t{1} << e;
    masks.push_back(mask);
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == ground - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }

  std::unordered_map<std::uint32_t, Vertex> index;
  index.reserve(masks.size());
  for (Vertex v = 0; v < masks.size(); ++v) index.emplace(masks[v], v);

  // Neighbours of S are the (n-1)-subsets of its n-element complement.
  const std::uint32_t all = (std::uint32_t{1} << ground) - 1;
  std::vector<Edge> edges;
  edges.reserve(masks.size() * n / 2);
  for (Vertex v = 0; v < masks.size(); ++v) {
    std::uint32_t complement = all & ~masks[v];
    for (std::uint32_t rest = complement; rest; rest &= rest - 1) {
      std::uint32_t drop = rest & (~rest + 1);
      Vertex w = index.at(complement & ~drop);
      if (v < w) edges.push_back({v, w});
    }
  }

  std::vector<std::string> labels;
  labels.reserve(masks.size());
  for (auto mask : masks) {
    std::string label = "{";
    for (std::size_t e = 0; e < ground; ++e)
      if (mask >> e & 1u) {
        if (label.size() > 1) label += ',';
        label += std::to_string(e + 1);
      }
    labels.push_back(label + "}");
  }
  return Graph(masks.size(), std::move(edges), std::move(labels));
}

namespace detail {

inline Vertex build_fibonacci_tree(GraphBuilder& b, std::size_t n) {
  Vertex root = b.add_vertex();
  if (n <= 2) return root;
  Vertex left = build_fibonacci_tree(b, n - 1);
  Vertex right = build_fibonacci_tree(b, n - 2);
  b.add_edge(root, left);
  b.add_edge(root, right);
  return root;
}

}  // namespace detail

// T_1 = T_2 = one vertex; T_n = root over T_{n-1} and T_{n-2}. Preorder
// numbering: root, then the T_{n-1} subtree, then the T_{n-2} subtree.
inline Graph fibonacci_tree(std::size_t n) {
  GraphBuilder b;
  detail::build_fibonacci_tree(b, n);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// block_n and the extended-block family
// ---------------------------------------------------------------------------

namespace detail {

struct RootedBlock {
  GraphBuilder builder;
  Vertex port = 0;
};

inline void append_copy(GraphBuilder& dst, const Graph& src, const std::string& prefix,
                        Vertex& offset) {
  offset = dst.vertex_count();
  for (Vertex v = 0; v < src.order(); ++v)
    dst.add_vertex(prefix + (src.labels().empty() ? std::string() : src.labels()[v]));
  for (const auto& e : src.edges()) dst.add_edge(offset + e.u, offset + e.v);
}

// Basic block rooted at r: r, A..F (ids 0..6). The extended variant swaps
// the CD, CE, DF, EF layer for eight new vertices G..N.
inline Graph basic_block(bool extended) {
  GraphBuilder b;
  const char* names = extended ? "rABCDEFGHIJKLMN" : "rABCDEF";
  for (const char* p = names; *p; ++p) b.add_vertex(std::string(1, *p));
  auto id = [&](char c) -> Vertex {
    return c == 'r' ? 0 : static_cast<Vertex>(c - 'A' + 1);
  };
  auto edge = [&](char a, char c) { b.add_edge(id(a), id(c)); };
  edge('r', 'A'); edge('r', 'B');
  edge('A', 'C'); edge('A', 'D'); edge('B', 'E'); edge('B', 'F');
  if (!extended) {
    edge('C', 'D'); edge('C', 'E'); edge('D', 'F'); edge('E', 'F');
  } else {
    edge('C', 'G'); edge('C', 'H'); edge('D', 'I'); edge('D', 'J');
    edge('E', 'K'); edge('E', 'L'); edge('F', 'M'); edge('F', 'N');
    edge('G', 'H'); edge('I', 'J'); edge('K', 'L'); edge('M', 'N');
    edge('G', 'I'); edge('H', 'J'); edge('K', 'M'); edge('L', 'N');
  }
  return std::move(b).build();
}

// Two copies of `half` (port at `port`) joined either by a direct edge
// (`subdivide` false, the block itself) or through a new centre vertex
// (the modified block, whose port is that centre).
inline Graph join_halves(const Graph& half, Vertex port, bool subdivide,
                         std::size_t level, Vertex* new_port) {
  GraphBuilder b;
  Vertex first = 0;
  Vertex second = 0;
  append_copy(b, half, "1", first);
  append_copy(b, half, "2", second);
  if (subdivide) {
    Vertex centre = b.add_vertex("x" + std::to_string(level));
    b.add_edge(first + port, centre);
    b.add_edge(centre, second + port);
    if (new_port) *new_port = centre;
  } else {
    b.add_edge(first + port, second + port);
  }
  return std::move(b).build();
}

inline Graph block_family_impl(std::size_t n, bool extended) {
  Graph rooted = basic_block(extended);
  Vertex port = 0;
  for (std::size_t level = 1; level < n; ++level)
    rooted = join_halves(rooted, port, true, level, &port);
  return join_halves(rooted, port, false, n, nullptr);
}

}  // namespace detail

// block_n: block_1 is two basic blocks joined root to root; block_n is two
// copies of block_{n-1} whose joining edge is subdivided, joined centre to
// centre. Copy 1 precedes copy 2 in the numbering; labels record the copy
// path, e.g. "12C" is C in copy 2 of copy 1.
inline Graph block_family(std::size_t n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "block_family requires n >= 1");
  return detail::block_family_impl(n, false);
}

inline Graph extended_block_family(std::size_t n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "extended_block_family requires n >= 1");
  return detail::block_family_impl(n, true);
}

// The 15-vertex extended basic block on its own (root r has degree 2).
inline Graph extended_basic_block() { return detail::basic_block(true); }
inline Graph basic_block() { return detail::basic_block(false); }

// ---------------------------------------------------------------------------
// G_k: port-square construction
// ---------------------------------------------------------------------------
//
// Level 0 is the square A-B-C-D; its four vertices are the ports. Each level
// adds squares Q_i = a_i b_i c_i d_i (i = 0..3, cycle a-b-c-d-a) and
//   * bracing edges b_i ~ d_{i+1} and d_i ~ b_{i+1} (indices mod 4);
//   * at level 1 the degree-2 ports p_i gain p_i ~ a_i and p_i ~ c_i, and
//     a_i ~ a_{i+2} crosses between opposite squares;
//   * at later levels the degree-3 ports gain p_i ~ a_i, and chord a_i ~ c_i.
// The c_i become the new ports (degree 3); everything else has degree 4.
// Closing pairs the final ports c_0 ~ c_2 and c_1 ~ c_3.
inline Graph g_family(std::size_t k, bool closed) {
  if (k < 1) throw Error(Errc::invalid_parameter, "g_family requires k >= 1");
  GraphBuilder b;
  std::array<Vertex, 4> ports{};
  for (std::size_t i = 0; i < 4; ++i) ports[i] = b.add_vertex(std::string(1, char('A' + i)));
  for (std::size_t i = 0; i < 4; ++i) b.add_edge(ports[i], ports[(i + 1) % 4]);

  for (std::size_t level = 1; level <= k; ++level) {
    std::array<std::array<Vertex, 4>, 4> sq{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        sq[i][j] = b.add_vertex(std::to_string(level) + char('A' + i) + char('a' + j));
    for (std::size_t i = 0; i < 4; ++i) {
      auto [a, bb, c, d] = sq[i];
      b.add_path({a, bb, c, d, a});
      b.add_edge(bb, sq[(i + 1) % 4][3]);
      b.add_edge(d, sq[(i + 1) % 4][1]);
      b.add_edge(ports[i], a);
      if (level == 1) {
        b.add_edge(ports[i], c);
        if (i < 2) b.add_edge(a, sq[i + 2][0]);
      } else {
        b.add_edge(a, c);
      }
    }
    for (std::size_t i = 0; i < 4; ++i) ports[i] = sq[i][2];
  }
  if (closed) {
    b.add_edge(ports[0], ports[2]);
    b.add_edge(ports[1], ports[3]);
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------

inline Graph generate(const FamilySpec& spec) {
  validate(spec);
  auto p = [&](std::size_t i) { return static_cast<std::size_t>(spec.params[i]); };
  switch (spec.family) {
    case Family::complete: return complete_graph(p(0));
    case Family::complete_bipartite: return complete_bipartite_graph(p(0), p(1));
    case Family::cycle: return cycle_graph(p(0));
    case Family::star: return star_graph(p(0));
    case Family::ladder: return ladder_graph(p(0));
    case Family::hypercube: return hypercube_graph(p(0));
    case Family::wheel: return wheel_graph(p(0));
    case Family::gear: return gear_graph(p(0));
    case Family::petersen: return petersen_graph();
    case Family::odd: return odd_graph(p(0));
    case Family::fibonacci_tree: return fibonacci_tree(p(0));
    case Family::block: return block_family(p(0));
    case Family::extended_block: return extended_block_family(p(0));
    case Family::gk_open: return g_family(p(0), false);
    case Family::gk_closed: return g_family(p(0), true);
  }
  throw Error(Errc::invalid_parameter, "unknown family");
}

}  // namespace acgt
