#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/content/corpus.hpp"
#include "acgt/content/page.hpp"
#include "acgt/error.hpp"

// Reader for integer-sequence entries laid out as
//
//   A123456 Title
//   0, 3, 75, ...
//   OFFSET 1,2
//   COMMENTS text...
//   FORMULA text...
//   ...
//
// A line whose first word is a section keyword opens that section; other
// lines continue the current one. Section text is kept verbatim.
namespace acgt::content {

inline constexpr std::array<std::string_view, 14> kEntrySections{
    "OFFSET", "COMMENTS", "REFERENCES", "LINKS", "FORMULA", "EXAMPLE", "MAPLE",
    "MATHEMATICA", "PROG", "CROSSREFS", "KEYWORD", "AUTHOR", "EXTENSIONS", "STATUS"};

struct SequenceEntry {
  std::string anumber;  // "A136328"
  std::string title;
  std::vector<std::string> terms;
  std::vector<std::pair<std::string, std::string>> sections;  // in file order

  const std::string* section(std::string_view name) const {
    for (const auto& [k, v] : sections)
      if (k == name) return &v;
    return nullptr;
  }
};

namespace detail {

inline std::string strip_blank_edges(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == '\n' || s[i] == ' ')) ++i;
  return s.substr(i);
}

inline bool is_anumber(std::string_view s) {
  return s.size() == 7 && s[0] == 'A' &&
         s.substr(1).find_first_not_of("0123456789") == std::string_view::npos;
}

}  // namespace detail

inline SequenceEntry parse_sequence_entry(std::string_view text) {
  SequenceEntry e;
  auto lines = detail::split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && detail::trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw ParseError(1, {}, "empty entry");
  {
    auto head = detail::trim(lines[i]);
    auto sp = head.find(' ');
    auto num = head.substr(0, sp);
    if (!detail::is_anumber(num)) throw ParseError(i + 1, std::string(num), "expected an A-number");
    e.anumber = std::string(num);
    e.title = sp == std::string_view::npos ? "" : std::string(detail::trim(head.substr(sp + 1)));
    ++i;
  }
  std::string* current = nullptr;
  for (; i < lines.size(); ++i) {
    auto line = lines[i];
    auto word = line.substr(0, line.find(' '));
    bool keyword = false;
    for (auto k : kEntrySections) keyword = keyword || k == word;
    if (keyword) {
      auto rest = line.size() > word.size() ? line.substr(word.size() + 1) : std::string_view{};
      e.sections.emplace_back(std::string(word), std::string(rest));
      current = &e.sections.back().second;
      continue;
    }
    if (current) {
      *current += '\n';
      *current += line;
      continue;
    }
    for (auto part : detail::split(line, ',')) {
      auto t = detail::trim(part);
      if (t.empty()) continue;
      if (t.find_first_not_of("-0123456789") != std::string_view::npos)
        throw ParseError(i + 1, std::string(t), "sequence terms must be integers");
      e.terms.emplace_back(t);
    }
  }
  for (auto& [k, v] : e.sections) v = detail::strip_blank_edges(std::move(v));
  return e;
}

// Maps an entry onto a logical page: COMMENTS become the definition,
// FORMULA and EXAMPLE become properties, program sections constructions,
// REFERENCES and LINKS more-to-explore items (one per paragraph), AUTHOR
// and EXTENSIONS the historical notes. STATUS "approved" publishes.
inline LogicalPage page_from_sequence_entry(const SequenceEntry& e, PageId id, ColorCode color) {
  LogicalPage p;
  p.id = std::move(id);
  p.title = e.title;
  p.kind = PageKind::combinatorial_object;
  p.color = color;
  p.computed["a-number"] = e.anumber;
  std::string terms;
  for (const auto& t : e.terms) terms += (terms.empty() ? "" : ", ") + t;
  p.computed["terms"] = terms;
  std::string history;
  for (const auto& [key, text] : e.sections) {
    if (key == "COMMENTS") {
      p.definition += (p.definition.empty() ? "" : "\n") + text;
    } else if (key == "FORMULA" || key == "EXAMPLE") {
      p.properties.push_back({text, color});
    } else if (key == "MAPLE" || key == "MATHEMATICA" || key == "PROG") {
      p.constructions.push_back({text, std::nullopt});
    } else if (key == "REFERENCES" || key == "LINKS") {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto gap = text.find("\n\n", pos);
        auto para = detail::strip_blank_edges(text.substr(pos, gap == std::string::npos ? gap : gap - pos));
        if (!para.empty()) p.more_to_explore.push_back({para, ""});
        if (gap == std::string::npos) break;
        pos = gap + 2;
      }
    } else if (key == "AUTHOR" || key == "EXTENSIONS") {
      history += (history.empty() ? "" : "\n") + text;
    } else if (key == "STATUS") {
      p.status = lowercase(text) == "approved" ? PageStatus::published : PageStatus::draft;
    } else {
      p.computed[lowercase(key)] = text;
    }
  }
  p.historical_notes = history;
  return p;
}

}  // namespace acgt::content
