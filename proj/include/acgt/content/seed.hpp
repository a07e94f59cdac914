#pragma once

#include <string>
#include <vector>

#include "acgt/content/corpus.hpp"
#include "acgt/content/page.hpp"
#include "acgt/distance.hpp"
#include "acgt/families.hpp"
#include "acgt/graph.hpp"

// Starter content for a first course in combinatorics and graph theory:
// a handful of special-graph pages, the prerequisite corpus, a syllabus
// map and the course calendar.
namespace acgt::content {

struct CalendarEntry {
  int week = 0;
  std::string task;
  friend bool operator==(const CalendarEntry&, const CalendarEntry&) = default;
};

struct CourseInfo {
  std::string id;
  std::string title;
  std::vector<CalendarEntry> calendar;
  friend bool operator==(const CourseInfo&, const CourseInfo&) = default;
};

struct SeedData {
  PageIndex pages;
  Corpus corpus;
  SyllabusMap syllabus;
  CourseInfo course;
};

namespace seed_ids {
inline const PageId wheel = PageId::from_number(1);
inline const PageId gear = PageId::from_number(2);
inline const PageId odd = PageId::from_number(3);
inline const PageId block = PageId::from_number(4);
inline const PageId gk = PageId::from_number(5);
inline const PageId hypercube = PageId::from_number(6);
inline const PageId petersen = PageId::from_number(7);
inline const PageId harary = PageId::from_number(8);
}  // namespace seed_ids

// Fills `computed` with vertex/edge counts (and the Wiener index when the
// instance is small) for every construction bound to a family.
inline void refresh_computed(LogicalPage& page) {
  for (const auto& c : page.constructions) {
    if (!c.binding) continue;
    auto key = to_string(*c.binding);
    Graph g = generate(*c.binding);
    page.computed[key + " vertices"] = std::to_string(g.order());
    page.computed[key + " edges"] = std::to_string(g.size());
    if (g.order() <= 512 && is_connected(g)) page.computed[key + " wiener"] = wiener(g).str();
  }
}

inline Corpus seed_corpus() {
  using P = PrereqType;
  Corpus c;
  auto add = [&](std::string term, P type, std::vector<std::string> targets) {
    c.add({std::move(term), type, std::move(targets)});
  };
  add("graphs", P::p1, {"notes/graphs-basics"});
  add("combinatorial structures", P::p1, {"notes/combinatorial-structures"});
  add("graphs characterized by parameters", P::p1, {"notes/graph-parameters"});
  add("sets", P::p1, {"notes/sets"});
  add("induced subgraphs", P::p1, {"notes/induced-subgraphs"});
  add("isomorphism", P::p1, {"notes/isomorphism"});
  add("trees", P::p1, {"notes/trees"});
  add("power set", P::p1, {"notes/power-set"});
  add("permutations and combinations", P::p1, {"notes/counting"});
  add("Pascal's triangle", P::p1, {"notes/pascal"});
  add("partitions", P::p2, {"notes/partitions-1", "notes/partitions-2"});
  add("recurrence relations", P::p1, {"notes/recurrences"});
  add("generating functions", P::p2, {"notes/gf-intro", "notes/gf-counting", "notes/gf-recurrences"});
  add("cycles", P::p1, {"notes/cycles"});
  add("univariate polynomials", P::p1, {"notes/polynomials"});
  add("k-regular graphs", P::p1, {"notes/regular-graphs"});
  add("distance in graphs", P::p1, {"notes/distance"});
  add("breadth-first search", P::p1, {"notes/bfs"});
  add("spanning trees", P::p1, {"notes/spanning-trees"});
  add("planarity and embeddings", P::p2, {"notes/planarity", "notes/embeddings"});
  add("perfect graphs", P::p2, {"notes/perfect-1", "notes/perfect-2", "notes/chordal"});
  add("Halin graphs", P::p2, {"notes/halin"});
  add("distance-regular graphs", P::p2, {"notes/distance-regular", "notes/intersection-arrays"});
  add("matrix-tree theorem", P::p2, {"notes/laplacian", "notes/matrix-tree"});
  return c;
}

inline SyllabusMap seed_syllabus() {
  SyllabusMap s;
  s.add_unit({"U1", "Graphs and their basic vocabulary",
              {"graphs", "sets", "cycles", "induced subgraphs", "isomorphism", "k-regular graphs",
               "graphs characterized by parameters"}});
  s.add_unit({"U2", "Counting",
              {"permutations and combinations", "Pascal's triangle", "power set",
               "recurrence relations", "combinatorial structures"}});
  s.add_unit({"U3", "Trees and distances",
              {"trees", "spanning trees", "distance in graphs", "breadth-first search"}});
  return s;
}

inline CourseInfo seed_course() {
  return {"CGT-1",
          "Combinatorics and Graph Theory, first course",
          {{1, "Portal opens; seed pages and prerequisite boxes reviewed in lecture"},
           {3, "First contribution window: figures for the block and G_k families"},
           {5, "Assignment on distance sums (Wiener index) against the portal pages"},
           {8, "Moderation sweep of pending submissions; group review"},
           {11, "Second contribution window: new pages proposed by students"},
           {14, "Final edit of the portal for the next intake"}}};
}

inline std::vector<LogicalPage> seed_pages() {
  using C = ColorCode;
  using P = PrereqType;
  std::vector<LogicalPage> pages;

  {
    LogicalPage p;
    p.id = seed_ids::wheel;
    p.title = "Wheel graph W_n";
    p.kind = PageKind::special_graph;
    p.status = PageStatus::published;
    p.color = C::in_course;
    p.definition =
        "For n >= 4, W_n is obtained from the cycle C_{n-1} by adding one more vertex (the hub) "
        "and joining it to every vertex of the cycle. W_n has n vertices.";
    p.figures = {"figures/wheel-w6.svg"};
    p.constructions = {{"Take a cycle on n-1 vertices and add a hub adjacent to all of them.",
                        FamilySpec{Family::wheel, {6}}}};
    p.properties = {
        {"W_n has 2(n-1) edges, so the edge-to-vertex ratio 2(n-1)/n tends to 2 as n grows.",
         C::in_course},
        {"W_n is planar and its plane embedding is unique.", C::in_course},
        {"W_n is isomorphic to its own planar dual.", C::in_course},
        {"W_n is a Halin graph: a tree with no degree-2 vertices plus a cycle through its leaves.",
         C::outside_course},
        {"W_n is perfect; its cycles of length four or more all have chords through the hub.",
         C::in_course}};
    p.related = {seed_ids::gear};
    p.more_to_explore = {{"Encyclopedic article on wheel graphs",
                          "https://en.wikipedia.org/wiki/Wheel_graph"}};
    p.historical_notes = "Wheels are a standard small example in planarity and duality.";
    p.prereq_boxes = {{{"graphs", "cycles"}, P::p1},
                      {{"planarity and embeddings", "perfect graphs", "Halin graphs"}, P::p2}};
    pages.push_back(std::move(p));
  }
  {
    LogicalPage p;
    p.id = seed_ids::gear;
    p.title = "Gear graph G_n";
    p.kind = PageKind::special_graph;
    p.status = PageStatus::published;
    p.color = C::in_course;
    p.definition =
        "The gear graph is a wheel W_n whose rim edges are each subdivided once, giving "
        "2n-1 vertices and 3(n-1) edges.";
    p.constructions = {{"Subdivide every rim edge of the wheel W_n.", FamilySpec{Family::gear, {6}}}};
    p.properties = {{"A gear graph is bipartite.", C::in_course},
                    {"Rim vertices have degree 3, subdivision vertices degree 2.", C::in_course}};
    p.related = {seed_ids::wheel};
    p.prereq_boxes = {{{"graphs", "cycles"}, P::p1}};
    pages.push_back(std::move(p));
  }
  {
    LogicalPage p;
    p.id = seed_ids::odd;
    p.title = "Odd graph O_n and its Wiener index";
    p.kind = PageKind::special_graph;
    p.status = PageStatus::published;
    p.color = C::in_course;
    p.definition =
        "The vertices of O_n are the (n-1)-element subsets of {1, ..., 2n-1}; two subsets are "
        "adjacent exactly when they are disjoint. O_2 is the triangle and O_3 the Petersen graph.";
    p.constructions = {{"Enumerate the (n-1)-subsets and join disjoint pairs.",
                        FamilySpec{Family::odd, {3}}},
                       {"Generate O_4 the same way.", FamilySpec{Family::odd, {4}}}};
    p.properties = {
        {"O_n is n-regular with C(2n-1, n-1) vertices.", C::in_course},
        {"O_n is distance-regular; its intersection array determines the Hosoya-Wiener "
         "polynomial and hence the Wiener index.",
         C::outside_course},
        {"Wiener index values start 0, 3, 75, 1435, 25515 (sequence A136328).", C::in_course}};
    p.related = {seed_ids::petersen};
    p.more_to_explore = {{"Integer sequence entry for the Wiener index of odd graphs",
                          "https://oeis.org/A136328"}};
    p.prereq_boxes = {{{"graphs", "sets", "cycles", "induced subgraphs", "univariate polynomials"},
                       P::p1},
                      {{"distance-regular graphs"}, P::p2}};
    pages.push_back(std::move(p));
  }
  {
    LogicalPage p;
    p.id = seed_ids::block;
    p.title = "The block_n family";
    p.kind = PageKind::graph_class;
    p.status = PageStatus::published;
    p.color = C::in_course;
    p.definition =
        "A basic block is a 3-regular gadget with one degree-2 root. block_1 joins the roots of "
        "two basic blocks by an edge; block_n joins two modified copies of block_{n-1} through "
        "their new middle vertices.";
    p.constructions = {{"Recursive doubling with a subdivided joining edge.",
                        FamilySpec{Family::block, {3}}},
                       {"The same recursion over the extended basic block.",
                        FamilySpec{Family::extended_block, {2}}}};
    p.properties = {
        {"block_n is connected and 3-regular.", C::in_course},
        {"V_n = 2(V_{n-1} + 1) and E_n = 2E_{n-1} + 3.", C::in_course},
        {"Exercise: compute the Wiener index of block_n, the sum of distances over all vertex "
         "pairs.",
         C::in_course}};
    p.related = {seed_ids::gk};
    p.prereq_boxes = {{{"k-regular graphs", "isomorphism", "recurrence relations"}, P::p1},
                      {{"distance in graphs", "breadth-first search"}, P::p1}};
    pages.push_back(std::move(p));
  }
  {
    LogicalPage p;
    p.id = seed_ids::gk;
    p.title = "The G_k family of 4-regular graphs";
    p.kind = PageKind::graph_class;
    p.status = PageStatus::published;
    p.color = C::in_course;
    p.definition =
        "G_k grows from a central square by attaching four new squares at each of k levels; "
        "the outermost ports are finally paired so that every vertex has degree 4.";
    p.constructions = {{"Closed construction with two levels.", FamilySpec{Family::gk_closed, {2}}},
                       {"Open construction (ports left at degree 2).",
                        FamilySpec{Family::gk_open, {2}}}};
    p.properties = {{"G_k is 4-regular with 16k + 4 vertices.", C::in_course},
                    {"Count the triangles, squares and hexagons of G_k.", C::in_course}};
    p.related = {seed_ids::block};
    p.prereq_boxes = {{{"k-regular graphs", "isomorphism", "recurrence relations"}, P::p1}};
    pages.push_back(std::move(p));
  }
  {
    LogicalPage p;
    p.id = seed_ids::hypercube;
    p.title = "Binary hypercube Q_n";
    p.kind = PageKind::special_graph;
    p.status = PageStatus::published;
    p.color = C::in_course;
    p.definition =
        "Q_n has the binary words of length n as vertices, two words adjacent when they differ "
        "in exactly one position.";
    p.constructions = {{"Label vertices 0..2^n-1 and flip one bit per edge.",
                        FamilySpec{Family::hypercube, {4}}}};
    p.properties = {{"Q_n is n-regular and bipartite with n 2^(n-1) edges.", C::in_course},
                    {"The Wiener index of Q_n is n 4^(n-1): 1, 8, 48, 256, 1280 for n = 1..5.",
                     C::in_course}};
    p.related = {seed_ids::odd};
    p.prereq_boxes = {{{"graphs", "distance in graphs", "power set"}, P::p1}};
    pages.push_back(std::move(p));
  }
  {
    LogicalPage p;
    p.id = seed_ids::petersen;
    p.title = "Petersen graph";
    p.kind = PageKind::special_graph;
    p.status = PageStatus::published;
    p.color = C::in_course;
    p.definition =
        "The Petersen graph has ten vertices: an outer 5-cycle, an inner pentagram, and five "
        "spokes joining them. It is the odd graph O_3.";
    p.constructions = {{"Outer cycle, inner pentagram, five spokes.",
                        FamilySpec{Family::petersen, {}}}};
    p.properties = {{"3-regular, girth 5, diameter 2, Wiener index 75.", C::in_course},
                    {"It has 2000 spanning trees.", C::in_course}};
    p.related = {seed_ids::odd};
    p.prereq_boxes = {{{"k-regular graphs", "isomorphism"}, P::p1},
                      {{"matrix-tree theorem"}, P::p2}};
    pages.push_back(std::move(p));
  }
  {
    LogicalPage p;
    p.id = seed_ids::harary;
    p.title = "Harary graphs";
    p.kind = PageKind::graph_class;
    p.status = PageStatus::draft;
    p.color = C::outside_course;
    p.definition = "Placeholder for a student-proposed page on Harary graphs.";
    p.related = {seed_ids::petersen};
    pages.push_back(std::move(p));
  }
  for (auto& p : pages) refresh_computed(p);
  return pages;
}

inline SeedData seed_data() {
  SeedData d;
  for (auto& p : seed_pages()) d.pages.emplace(p.id, std::move(p));
  d.corpus = seed_corpus();
  d.syllabus = seed_syllabus();
  d.course = seed_course();
  return d;
}

}  // namespace acgt::content
