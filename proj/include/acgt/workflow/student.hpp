#pragma once

#include <cctype>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/content/corpus.hpp"
#include "acgt/content/page.hpp"
#include "acgt/error.hpp"
#include "acgt/workflow/grades.hpp"

namespace acgt::workflow {

enum class Outcome { published, rejected };

inline std::string_view to_string(Outcome o) {
  return o == Outcome::published ? "published" : "rejected";
}
inline std::optional<Outcome> parse_outcome(std::string_view s) {
  if (s == "published") return Outcome::published;
  if (s == "rejected") return Outcome::rejected;
  return std::nullopt;
}

struct LogEntry {
  std::string submission_id;
  Outcome outcome = Outcome::published;
  std::optional<content::PageId> credited_page;
  std::int64_t timestamp = 0;
  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

struct StudentRecord {
  std::string id;
  std::string name;
  std::map<std::string, Grade> grades;
  std::optional<Grade> T;  // unset while no relevant subject is graded
  std::optional<int> group;
  std::vector<LogEntry> contribution_log;

  void recompute(const std::set<std::string>& relevant) {
    try {
      T = derive_T(grades, relevant);
      group = assign_group(*T);
    } catch (const Error& e) {
      if (e.code() != Errc::no_relevant_grades) throw;
      T.reset();
      group.reset();
    }
  }

  friend bool operator==(const StudentRecord&, const StudentRecord&) = default;
};

// A recomputed group that differs from the previous one; waits for an
// instructor to confirm it.
struct GroupNotice {
  std::string student_id;
  std::optional<int> from;
  std::optional<int> to;
  std::int64_t timestamp = 0;
  bool confirmed = false;
  friend bool operator==(const GroupNotice&, const GroupNotice&) = default;
};

// Student ids double as file names in the store.
inline bool valid_student_id(std::string_view id) {
  if (id.empty() || id.size() > 64 || id.front() == '.') return false;
  for (char c : id)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_' && c != '-') return false;
  return true;
}

struct RosterLine {
  std::string id;
  std::string name;
  std::map<std::string, Grade> grades;
};

// "id<TAB>name<TAB>subject=grade,subject=grade,..." per line; '#' lines and
// blank lines are skipped.
inline std::vector<RosterLine> parse_roster(std::string_view text) {
  std::vector<RosterLine> out;
  std::set<std::string> seen;
  auto lines = content::detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (content::detail::trim(line).empty() || line.front() == '#') continue;
    auto fields = content::detail::split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty())
      throw ParseError(i + 1, {}, "expected id<TAB>name<TAB>grades");
    RosterLine r{std::string(fields[0]), std::string(fields[1]), {}};
    if (!valid_student_id(r.id)) throw ParseError(i + 1, r.id, "student ids use letters, digits, '.', '_', '-'");
    if (!seen.insert(r.id).second) throw ParseError(i + 1, r.id, "duplicate student id");
    if (fields.size() == 3 && !content::detail::trim(fields[2]).empty()) {
      for (auto item : content::detail::split(fields[2], ',')) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError(i + 1, std::string(item), "expected subject=grade");
        auto subject = content::detail::trim(item.substr(0, eq));
        auto grade = parse_grade(content::detail::trim(item.substr(eq + 1)));
        if (subject.empty() || !grade) throw ParseError(i + 1, std::string(item), "bad subject=grade");
        r.grades[std::string(subject)] = *grade;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct ContributionReport {
  std::string student_id;
  std::vector<LogEntry> entries;
  std::size_t published = 0;
  std::size_t rejected = 0;

  std::string to_table() const {
    std::ostringstream out;
    out << "student " << student_id << ": " << published << " published, " << rejected
        << " rejected\n";
    for (const auto& e : entries)
      out << std::setw(12) << e.timestamp << "  " << std::left << std::setw(10) << e.submission_id
          << std::setw(10) << to_string(e.outcome) << std::right
          << (e.credited_page ? e.credited_page->str() : "-") << "\n";
    return out.str();
  }
};

inline ContributionReport make_report(const StudentRecord& s) {
  ContributionReport r{s.id, s.contribution_log, 0, 0};
  for (const auto& e : s.contribution_log) (e.outcome == Outcome::published ? r.published : r.rejected)++;
  return r;
}

}  // namespace acgt::workflow
