#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/bigint.hpp"
#include "acgt/content/corpus.hpp"
#include "acgt/content/page.hpp"
#include "acgt/error.hpp"

namespace acgt::content {

// Distinct prerequisite terms of a page (case-insensitive), each with the
// type taken from the corpus when known, else from its box.
inline std::map<std::string, PrereqType> page_terms(const LogicalPage& p, const Corpus* corpus) {
  std::map<std::string, PrereqType> terms;
  for (const auto& box : p.prereq_boxes)
    for (const auto& t : box.terms) {
      const CorpusTerm* known = corpus ? corpus->find(t) : nullptr;
      terms.emplace(lowercase(t), known ? known->type : box.declared_type);
    }
  return terms;
}

// Published pages whose prerequisite boxes mention `term`, id ascending.
inline std::vector<PageId> backward_links(std::string_view term, const Corpus& corpus,
                                          const PageIndex& index) {
  if (!corpus.contains(term))
    throw Error(Errc::unknown_term, "unknown corpus term '" + std::string(term) + "'");
  auto key = lowercase(term);
  std::vector<PageId> out;
  for (const auto& [id, page] : index) {
    if (!page.published()) continue;
    bool hit = false;
    for (const auto& box : page.prereq_boxes)
      for (const auto& t : box.terms) hit = hit || lowercase(t) == key;
    if (hit) out.push_back(id);
  }
  return out;
}

// Weighted share of a page's prerequisite terms covered by some syllabus
// unit. Pages without terms score 1.
inline BigRational relevance(const LogicalPage& p, const SyllabusMap& s, const Corpus& corpus) {
  BigRational covered = 0;
  BigRational total = 0;
  for (const auto& [term, type] : page_terms(p, &corpus)) {
    const BigRational& w = type == PrereqType::p1 ? s.w1 : s.w2;
    total += w;
    if (s.covers(term)) covered += w;
  }
  if (total == 0) return 1;
  return covered / total;
}

struct SearchHit {
  PageId id;
  std::uint64_t score = 0;
  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

// Lowercased runs of ASCII letters and digits; bytes >= 0x80 stay inside a
// token so UTF-8 words are not split.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || c >= 0x80) {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

namespace detail {

inline void count_tokens(std::string_view text, std::uint64_t weight,
                         const std::set<std::string>& query, std::uint64_t& score) {
  for (const auto& tok : tokenize(text))
    if (query.count(tok)) score += weight;
}

}  // namespace detail

inline constexpr std::uint64_t kTitleWeight = 3;
inline constexpr std::uint64_t kDefinitionWeight = 2;

// Keyword search over Published pages. Score sums, for each occurrence of a
// query token, 3 in the title, 2 in the definition and 1 anywhere else.
inline std::vector<SearchHit> search(std::string_view q, const PageIndex& index) {
  auto qt = tokenize(q);
  std::set<std::string> query(qt.begin(), qt.end());
  std::vector<SearchHit> hits;
  if (query.empty()) return hits;
  for (const auto& [id, p] : index) {
    if (!p.published()) continue;
    std::uint64_t score = 0;
    auto other = [&](std::string_view text) { detail::count_tokens(text, 1, query, score); };
    detail::count_tokens(p.title, kTitleWeight, query, score);
    detail::count_tokens(p.definition, kDefinitionWeight, query, score);
    for (const auto& f : p.figures) other(f);
    for (const auto& c : p.constructions) other(c.text);
    for (const auto& prop : p.properties) other(prop.text);
    for (const auto& m : p.more_to_explore) other(m.text);
    other(p.historical_notes);
    for (const auto& r : p.remarks) other(r.text);
    for (const auto& b : p.prereq_boxes)
      for (const auto& t : b.terms) other(t);
    for (const auto& c : p.prerequisite_courses) other(c);
    if (score > 0) hits.push_back({id, score});
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const SearchHit& a, const SearchHit& b) { return a.score > b.score; });
  return hits;
}

}  // namespace acgt::content
