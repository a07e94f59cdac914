#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "acgt/error.hpp"

namespace acgt::workflow {

enum class Grade { A, B, C, D, E, F };

inline constexpr std::string_view kGradeLetters = "ABCDEF";

inline std::optional<Grade> parse_grade(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  auto pos = kGradeLetters.find(s[0]);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Grade>(pos);
}

inline Grade grade_or_throw(std::string_view s) {
  auto g = parse_grade(s);
  if (!g) throw Error(Errc::invalid_grade, "grade must be one of A-F, got '" + std::string(s) + "'");
  return *g;
}

inline char to_char(Grade g) { return kGradeLetters[static_cast<std::size_t>(g)]; }
inline std::string to_string(Grade g) { return std::string(1, to_char(g)); }

// A=5 down to F=0.
inline int grade_points(Grade g) { return 5 - static_cast<int>(g); }

// Group 1: A, B. Group 2: C, D. Group 3: E, F.
inline int assign_group(Grade t) { return static_cast<int>(t) / 2 + 1; }

inline int assign_group(std::string_view t) { return assign_group(grade_or_throw(t)); }

// Mean grade points over the relevant subjects, rounded half-up back to a
// letter.
inline Grade derive_T(const std::map<std::string, Grade>& grades,
                      const std::set<std::string>& relevant) {
  int sum = 0;
  int count = 0;
  for (const auto& [subject, g] : grades)
    if (relevant.count(subject)) {
      sum += grade_points(g);
      ++count;
    }
  if (count == 0) throw Error(Errc::no_relevant_grades, "no grades in subjects relevant to the course");
  // round(sum / count) with halves going up, in integers.
  int points = (2 * sum + count) / (2 * count);
  return static_cast<Grade>(5 - points);
}

inline std::set<std::string> default_relevant_subjects() {
  return {"CGT", "Combinatorics", "Graph Theory", "Discrete Mathematics", "Algorithms",
          "Data Structures"};
}

}  // namespace acgt::workflow
