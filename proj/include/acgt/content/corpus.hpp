#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/bigint.hpp"
#include "acgt/content/page.hpp"
#include "acgt/error.hpp"

namespace acgt::content {

// A prerequisite keyword or phrase. P1 terms point at exactly one short
// write-up (or an existing page id); P2 terms point at one to four.
struct CorpusTerm {
  std::string term;
  PrereqType type = PrereqType::p1;
  std::vector<std::string> targets;
  friend bool operator==(const CorpusTerm&, const CorpusTerm&) = default;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Terms may not be empty, carry surrounding blanks, or contain the list
// separators used by the text formats (';', tab, newline).
inline bool valid_term_text(std::string_view term) {
  if (term.empty() || detail::trim(term) != term) return false;
  return term.find_first_of(";\t\n\r") == std::string_view::npos;
}

class Corpus {
 public:
  void add(CorpusTerm t) {
    if (!valid_term_text(t.term))
      throw Error(Errc::invalid_parameter, "invalid corpus term '" + t.term + "'");
    std::size_t n = t.targets.size();
    if (t.type == PrereqType::p1 && n != 1)
      throw Error(Errc::invalid_parameter, "P1 term '" + t.term + "' needs exactly one target");
    if (t.type == PrereqType::p2 && (n < 1 || n > 4))
      throw Error(Errc::invalid_parameter, "P2 term '" + t.term + "' needs 1-4 targets");
    for (const auto& target : t.targets)
      if (target.empty() || target.find_first_of("\t\n\r") != std::string::npos)
        throw Error(Errc::invalid_parameter, "bad target for term '" + t.term + "'");
    auto key = lowercase(t.term);
    if (index_.count(key))
      throw Error(Errc::conflict, "duplicate corpus term '" + t.term + "'");
    index_.emplace(std::move(key), terms_.size());
    terms_.push_back(std::move(t));
  }

  const CorpusTerm* find(std::string_view term) const {
    auto it = index_.find(lowercase(term));
    return it == index_.end() ? nullptr : &terms_[it->second];
  }

  bool contains(std::string_view term) const { return find(term) != nullptr; }

  const std::vector<CorpusTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const Corpus& a, const Corpus& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<CorpusTerm> terms_;
  std::map<std::string, std::size_t> index_;  // lowercase term -> position
};

// Corpus file: one term per line, "type<TAB>term<TAB>target<TAB>...".
// Blank lines and lines starting with '#' are ignored.
inline Corpus parse_corpus(std::string_view text) {
  Corpus corpus;
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto fields = detail::split(line, '\t');
    if (fields.size() < 3) throw ParseError(i + 1, {}, "expected type<TAB>term<TAB>targets");
    auto type = parse_prereq_type(fields[0]);
    if (!type) throw ParseError(i + 1, std::string(fields[0]), "type must be P1 or P2");
    CorpusTerm term{std::string(fields[1]), *type, {}};
    for (std::size_t f = 2; f < fields.size(); ++f) term.targets.emplace_back(fields[f]);
    try {
      corpus.add(std::move(term));
    } catch (const Error& e) {
      throw ParseError(i + 1, std::string(fields[1]), e.what());
    }
  }
  return corpus;
}

inline std::string write_corpus(const Corpus& corpus) {
  std::string out;
  for (const auto& t : corpus.terms()) {
    out += to_string(t.type);
    out += '\t';
    out += t.term;
    for (const auto& target : t.targets) {
      out += '\t';
      out += target;
    }
    out += '\n';
  }
  return out;
}

struct SyllabusUnit {
  std::string id;
  std::string title;
  std::set<std::string> covered_terms;  // stored lowercase
  friend bool operator==(const SyllabusUnit&, const SyllabusUnit&) = default;
};

// Lecture units and the P1/P2 weights of the relevance indicator.
struct SyllabusMap {
  std::vector<SyllabusUnit> units;
  BigRational w1 = 1;
  BigRational w2 = 2;

  bool covers(std::string_view term) const {
    auto key = lowercase(term);
    for (const auto& u : units)
      if (u.covered_terms.count(key)) return true;
    return false;
  }

  void add_unit(SyllabusUnit unit) {
    for (const auto& u : units)
      if (u.id == unit.id) throw Error(Errc::conflict, "duplicate syllabus unit '" + unit.id + "'");
    std::set<std::string> lowered;
    for (const auto& t : unit.covered_terms) lowered.insert(lowercase(t));
    unit.covered_terms = std::move(lowered);
    units.push_back(std::move(unit));
  }

  void set_weights(BigRational p1, BigRational p2) {
    if (p1 <= 0 || p2 <= 0) throw Error(Errc::invalid_parameter, "relevance weights must be positive");
    w1 = std::move(p1);
    w2 = std::move(p2);
  }

  friend bool operator==(const SyllabusMap&, const SyllabusMap&) = default;
};

// Syllabus file: "unit-id<TAB>title<TAB>term;term;..." per line, plus an
// optional "!weights<TAB>w1<TAB>w2" line. '#' starts a comment line.
inline SyllabusMap parse_syllabus(std::string_view text) {
  SyllabusMap map;
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto fields = detail::split(line, '\t');
    try {
      if (fields[0] == "!weights") {
        if (fields.size() != 3) throw ParseError(i + 1, "!weights", "expected two weights");
        map.set_weights(parse_rational(fields[1]), parse_rational(fields[2]));
        continue;
      }
      if (fields.size() != 3 || fields[0].empty())
        throw ParseError(i + 1, {}, "expected id<TAB>title<TAB>terms");
      SyllabusUnit unit{std::string(fields[0]), std::string(fields[1]), {}};
      for (auto term : detail::split(fields[2], ';')) {
        auto t = detail::trim(term);
        if (!t.empty()) unit.covered_terms.emplace(t);
      }
      map.add_unit(std::move(unit));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(i + 1, std::string(fields[0]), e.what());
    }
  }
  return map;
}

inline std::string write_syllabus(const SyllabusMap& map) {
  std::string out = "!weights\t" + acgt::to_string(map.w1) + "\t" + acgt::to_string(map.w2) + "\n";
  for (const auto& u : map.units) {
    out += u.id + "\t" + u.title + "\t";
    bool first = true;
    for (const auto& t : u.covered_terms) {
      if (!first) out += ';';
      out += t;
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace acgt::content
