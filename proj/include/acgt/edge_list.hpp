#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/bigint.hpp"
#include "acgt/error.hpp"
#include "acgt/graph.hpp"

namespace acgt {

// Edge-list text: "n m", then m lines "u v [w]" with 0-based u < v and an
// optional exact weight (integer, decimal or p/q). Every line ends in '\n'.
inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += std::to_string(edges[i].u);
    out += ' ';
    out += std::to_string(edges[i].v);
    if (g.weighted()) {
      out += ' ';
      out += to_string(g.weight(i));
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

inline std::size_t parse_index(std::string_view field, std::size_t line) {
  if (!all_digits(field) || field.size() > 18)
    throw ParseError(line, {}, "expected a vertex index, got '" + std::string(field) + "'");
  return std::stoull(std::string(field));
}

}  // namespace detail

inline Graph read_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  std::size_t cursor = 0;
  auto next_nonblank = [&]() -> std::vector<std::string_view> {
    while (cursor < lines.size()) {
      auto fields = detail::split_ws(lines[cursor++]);
      if (!fields.empty()) return fields;
    }
    return {};
  };

  auto header = next_nonblank();
  if (header.size() != 2) throw ParseError(cursor, {}, "header must be 'n m'");
  std::size_t header_line = cursor;
  std::size_t n = detail::parse_index(header[0], header_line);
  std::size_t m = detail::parse_index(header[1], header_line);

  std::vector<Edge> edges;
  std::vector<BigRational> weights;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto fields = next_nonblank();
    if (fields.empty())
      throw ParseError(cursor, {}, "expected " + std::to_string(m) + " edges, found " +
                                       std::to_string(k));
    if (fields.size() != 2 && fields.size() != 3)
      throw ParseError(cursor, {}, "edge line must be 'u v [w]'");
    Vertex u = detail::parse_index(fields[0], cursor);
    Vertex v = detail::parse_index(fields[1], cursor);
    if (u >= v) throw ParseError(cursor, {}, "edge endpoints must satisfy u < v");
    if (fields.size() == 3) {
      if (weights.size() != edges.size())
        throw ParseError(cursor, {}, "either all edges carry a weight or none do");
      try {
        weights.push_back(parse_rational(fields[2]));
      } catch (const Error& err) {
        throw ParseError(cursor, {}, err.what());
      }
    } else if (!weights.empty()) {
      throw ParseError(cursor, {}, "either all edges carry a weight or none do");
    }
    edges.push_back({u, v});
  }
  if (!next_nonblank().empty()) throw ParseError(cursor, {}, "trailing content after edges");
  try {
    return Graph(n, std::move(edges), std::move(weights));
  } catch (const Error& err) {
    throw ParseError(header_line, {}, err.what());
  }
}

}  // namespace acgt
