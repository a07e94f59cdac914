#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>

#include "acgt/families.hpp"
#include "acgt/isomorphism.hpp"

using namespace acgt;

namespace {

// Test-side construction of block_1 and block_2 written directly from the
// textual definition, independent of the recursive builder.
struct HandBuilt {
  std::vector<Edge> edges;
  std::size_t n = 0;

  // Adds a basic block (r, A..F) and returns the index of r.
  Vertex basic() {
    Vertex base = n;
    n += 7;
    auto at = [&](char c) { return c == 'r' ? base : base + 1 + (c - 'A'); };
    for (auto [a, b] : std::vector<std::pair<char, char>>{{'r', 'A'}, {'r', 'B'}, {'A', 'C'},
                                                          {'A', 'D'}, {'B', 'E'}, {'B', 'F'},
                                                          {'C', 'D'}, {'C', 'E'}, {'D', 'F'},
                                                          {'E', 'F'}})
      edges.push_back({at(a), at(b)});
    return base;
  }

  Vertex fresh() { return n++; }
};

Graph hand_block1() {
  HandBuilt h;
  Vertex r1 = h.basic();
  Vertex r2 = h.basic();
  h.edges.push_back({r1, r2});
  return Graph(h.n, h.edges);
}

Graph hand_block2() {
  HandBuilt h;
  Vertex x[2];
  for (auto& centre : x) {
    // modified block_1: the r1 r2 edge replaced by the path r1 - x - r2.
    Vertex r1 = h.basic();
    Vertex r2 = h.basic();
    centre = h.fresh();
    h.edges.push_back({r1, centre});
    h.edges.push_back({centre, r2});
  }
  h.edges.push_back({x[0], x[1]});
  return Graph(h.n, h.edges);
}

std::map<std::size_t, std::size_t> degree_census(const Graph& g) {
  std::map<std::size_t, std::size_t> census;
  for (auto d : degrees(g)) ++census[d];
  return census;
}

}  // namespace

TEST(Generate, CompleteGraph) {
  auto g = generate({Family::complete, {4}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 6u);
}

TEST(Generate, WheelCountsAndHub) {
  auto g = generate({Family::wheel, {5}});
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.size(), 8u);
  EXPECT_EQ(g.degree(0), 4u);
}

TEST(Generate, OddGraphsMatchClassicalGraphs) {
  auto o3 = generate({Family::odd, {3}});
  EXPECT_EQ(o3.order(), 10u);
  EXPECT_TRUE(is_k_regular(o3, 3));
  EXPECT_TRUE(are_isomorphic(o3, petersen_graph()));
  EXPECT_TRUE(are_isomorphic(generate({Family::odd, {2}}), cycle_graph(3)));
  EXPECT_EQ(o3.labels().front(), "{1,2}");
}

TEST(Generate, OddGraphOrderAndRegularity) {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto g = odd_graph(n);
    EXPECT_EQ(BigInt(g.order()), binomial(2 * n - 1, n - 1)) << n;
    EXPECT_TRUE(is_k_regular(g, n)) << n;
    EXPECT_TRUE(is_connected(g)) << n;
  }
}

TEST(Generate, GearCounts) {
  for (std::size_t n = 4; n <= 40; ++n) {
    auto g = gear_graph(n);
    EXPECT_EQ(g.order(), 2 * n - 1);
    EXPECT_EQ(g.size(), 3 * (n - 1));
  }
}

TEST(Generate, WheelEdgeRatioApproachesTwo) {
  double previous = 0.0;
  for (std::size_t n = 4; n <= 1000; ++n) {
    auto g = wheel_graph(n);
    ASSERT_EQ(g.size(), 2 * (n - 1));
    double ratio = static_cast<double>(g.size()) / static_cast<double>(g.order());
    EXPECT_GT(ratio, previous);
    previous = ratio;
  }
  EXPECT_LT(2.0 - previous, 1e-2);
}

TEST(Generate, HypercubeLadderStarBipartiteFibonacci) {
  auto q = hypercube_graph(4);
  EXPECT_EQ(q.order(), 16u);
  EXPECT_EQ(q.size(), 32u);
  EXPECT_TRUE(q.has_edge(0b0101, 0b0111));
  EXPECT_FALSE(q.has_edge(0b0101, 0b0110));

  auto l = ladder_graph(5);
  EXPECT_EQ(l.order(), 10u);
  EXPECT_EQ(l.size(), 13u);

  auto s = star_graph(6);
  EXPECT_EQ(s.order(), 7u);
  EXPECT_EQ(s.degree(0), 6u);

  auto k = complete_bipartite_graph(3, 4);
  EXPECT_EQ(k.size(), 12u);
  EXPECT_FALSE(k.has_edge(0, 1));

  // |T_n| = 1 + |T_{n-1}| + |T_{n-2}| with |T_1| = |T_2| = 1.
  std::vector<std::size_t> sizes{0, 1, 1};
  for (std::size_t n = 3; n <= 15; ++n) sizes.push_back(1 + sizes[n - 1] + sizes[n - 2]);
  for (std::size_t n = 1; n <= 15; ++n) {
    auto t = fibonacci_tree(n);
    EXPECT_EQ(t.order(), sizes[n]);
    EXPECT_EQ(t.size() + 1, t.order());
    EXPECT_TRUE(is_connected(t));
  }
}

TEST(Generate, IsDeterministic) {
  for (auto spec : {FamilySpec{Family::odd, {4}}, FamilySpec{Family::block, {3}},
                    FamilySpec{Family::gk_open, {2}}, FamilySpec{Family::gear, {9}}})
    EXPECT_EQ(generate(spec), generate(spec)) << to_string(spec);
}

TEST(Generate, RejectsBadParameters) {
  EXPECT_THROW(generate({Family::cycle, {2}}), Error);
  EXPECT_THROW(generate({Family::wheel, {3}}), Error);
  EXPECT_THROW(generate({Family::odd, {1}}), Error);
  EXPECT_THROW(generate({Family::hypercube, {0}}), Error);
  EXPECT_THROW(generate({Family::complete_bipartite, {3}}), Error);
  EXPECT_THROW(generate({Family::petersen, {1}}), Error);
  EXPECT_THROW(generate({Family::block, {0}}), Error);
  EXPECT_THROW(generate({Family::gk_closed, {0}}), Error);
  EXPECT_THROW(parse_family_spec("moebius:4"), Error);
  try {
    generate({Family::cycle, {2}});
  } catch (const Error& e) {
    EXPECT_EQ(e.reason(), "invalid-parameter");
  }
}

TEST(FamilySpecText, ParsesAndPrints) {
  auto spec = parse_family_spec("complete-bipartite:3,4");
  EXPECT_EQ(spec.family, Family::complete_bipartite);
  EXPECT_EQ(spec.params, (std::vector<std::int64_t>{3, 4}));
  EXPECT_EQ(to_string(spec), "complete-bipartite:3,4");
  EXPECT_EQ(to_string(parse_family_spec("petersen")), "petersen");
}

TEST(BlockFamily, BasicBlockMatchesDefinition) {
  auto b = basic_block();
  EXPECT_EQ(b.order(), 7u);
  EXPECT_EQ(b.size(), 10u);
  EXPECT_EQ(b.degree(0), 2u);
}

TEST(BlockFamily, Block1IsCubicOn14Vertices) {
  auto g = block_family(1);
  EXPECT_EQ(g.order(), 14u);
  EXPECT_EQ(g.size(), 21u);
  EXPECT_TRUE(is_k_regular(g, 3));
  EXPECT_TRUE(are_isomorphic(g, hand_block1()));
}

TEST(BlockFamily, Block2AgreesWithHandDoubling) {
  auto oracle = hand_block2();
  ASSERT_EQ(oracle.order(), 30u);
  ASSERT_EQ(oracle.size(), 45u);
  auto g = block_family(2);
  EXPECT_EQ(g.order(), 30u);
  EXPECT_EQ(g.size(), 45u);
  EXPECT_TRUE(are_isomorphic(g, oracle));
}

TEST(BlockFamily, RecurrenceAndRegularity) {
  std::size_t v = 14, e = 21;
  for (std::size_t n = 1; n <= 8; ++n) {
    auto g = block_family(n);
    EXPECT_EQ(g.order(), v) << n;
    EXPECT_EQ(g.size(), e) << n;
    EXPECT_TRUE(is_k_regular(g, 3)) << n;
    EXPECT_TRUE(is_connected(g)) << n;
    v = 2 * (v + 1);
    e = 2 * e + 3;
  }
  EXPECT_EQ(block_family(3).order(), 62u);
}

TEST(ExtendedBlockFamily, ExtendedBasicBlock) {
  auto b = extended_basic_block();
  EXPECT_EQ(b.order(), 15u);
  EXPECT_EQ(b.degree(0), 2u);
  for (Vertex v = 1; v < b.order(); ++v) EXPECT_EQ(b.degree(v), 3u) << b.labels()[v];
  // C, D, E, F are vertices 3..6; the removed layer must be absent.
  EXPECT_FALSE(b.has_edge(3, 4));  // CD
  EXPECT_FALSE(b.has_edge(3, 5));  // CE
  EXPECT_FALSE(b.has_edge(4, 6));  // DF
  EXPECT_FALSE(b.has_edge(5, 6));  // EF
}

TEST(ExtendedBlockFamily, CubicWithBlockRecurrence) {
  std::size_t v = 30, e = 45;
  for (std::size_t n = 1; n <= 8; ++n) {
    auto g = extended_block_family(n);
    EXPECT_EQ(g.order(), v) << n;
    EXPECT_EQ(g.size(), e) << n;
    EXPECT_EQ(2 * g.size(), 3 * g.order());
    EXPECT_TRUE(is_k_regular(g, 3)) << n;
    EXPECT_TRUE(is_connected(g)) << n;
    v = 2 * (v + 1);
    e = 2 * e + 3;
  }
}

TEST(GFamily, OpenG1DegreeCensus) {
  auto g = g_family(1, false);
  EXPECT_EQ(g.order(), 20u);
  EXPECT_EQ(g.size(), 38u);
  auto census = degree_census(g);
  EXPECT_EQ(census.size(), 2u);
  EXPECT_EQ(census[3], 4u);
  EXPECT_EQ(census[4], 16u);
}

TEST(GFamily, LevelsAddSixteenVertices) {
  for (std::size_t k = 1; k <= 6; ++k) {
    auto open = g_family(k, false);
    auto closed = g_family(k, true);
    EXPECT_EQ(open.order(), 16 * k + 4);
    EXPECT_EQ(degree_census(open)[3], 4u);
    EXPECT_EQ(degree_census(open)[4], 16 * k);
    EXPECT_TRUE(is_connected(open));
    EXPECT_TRUE(is_k_regular(closed, 4));
    EXPECT_EQ(closed.size(), 2 * closed.order());
    EXPECT_TRUE(is_connected(closed));
  }
  EXPECT_EQ(g_family(2, false).order(), 36u);
}
