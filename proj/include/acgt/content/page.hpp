#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/error.hpp"
#include "acgt/families.hpp"

namespace acgt::content {

// "ACGT-" followed by exactly six digits. Never changes once assigned.
class PageId {
 public:
  PageId() = default;

  static bool valid(std::string_view text) {
    if (text.size() != 11 || text.substr(0, 5) != "ACGT-") return false;
    return std::all_of(text.begin() + 5, text.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  static PageId parse(std::string_view text) {
    if (!valid(text))
      throw Error(Errc::invalid_parameter, "malformed page id '" + std::string(text) + "'");
    PageId id;
    id.value_ = std::string(text);
    return id;
  }

  static PageId from_number(unsigned number) {
    std::string digits = std::to_string(number);
    if (digits.size() > 6) throw Error(Errc::invalid_parameter, "page number out of range");
    return parse("ACGT-" + std::string(6 - digits.size(), '0') + digits);
  }

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const PageId&, const PageId&) = default;

 private:
  std::string value_;
};

enum class ColorCode { in_course, outside_course };
enum class PageKind { special_graph, graph_class, combinatorial_object };
enum class PageStatus { draft, published };
enum class PrereqType { p1, p2 };

inline std::string_view to_string(ColorCode c) {
  return c == ColorCode::in_course ? "in-course" : "outside-course";
}
inline std::string_view to_string(PageKind k) {
  switch (k) {
    case PageKind::special_graph: return "special-graph";
    case PageKind::graph_class: return "graph-class";
    case PageKind::combinatorial_object: return "combinatorial-object";
  }
  return "";
}
inline std::string_view to_string(PageStatus s) {
  return s == PageStatus::published ? "Published" : "Draft";
}
inline std::string_view to_string(PrereqType t) { return t == PrereqType::p1 ? "P1" : "P2"; }

inline std::optional<ColorCode> parse_color(std::string_view s) {
  if (s == "in-course") return ColorCode::in_course;
  if (s == "outside-course") return ColorCode::outside_course;
  return std::nullopt;
}
inline std::optional<PageKind> parse_kind(std::string_view s) {
  if (s == "special-graph") return PageKind::special_graph;
  if (s == "graph-class") return PageKind::graph_class;
  if (s == "combinatorial-object") return PageKind::combinatorial_object;
  return std::nullopt;
}
inline std::optional<PageStatus> parse_status(std::string_view s) {
  if (s == "Published") return PageStatus::published;
  if (s == "Draft") return PageStatus::draft;
  return std::nullopt;
}
inline std::optional<PrereqType> parse_prereq_type(std::string_view s) {
  if (s == "P1") return PrereqType::p1;
  if (s == "P2") return PrereqType::p2;
  return std::nullopt;
}

struct Construction {
  std::string text;
  std::optional<FamilySpec> binding;  // compute-engine instance, if any
  friend bool operator==(const Construction&, const Construction&) = default;
};

struct Property {
  std::string text;
  std::optional<ColorCode> color;
  friend bool operator==(const Property&, const Property&) = default;
};

struct Reference {
  std::string text;
  std::string url;  // may be empty
  friend bool operator==(const Reference&, const Reference&) = default;
};

struct Remark {
  std::string author;
  std::string text;
  friend bool operator==(const Remark&, const Remark&) = default;
};

struct PrerequisiteBox {
  std::vector<std::string> terms;
  PrereqType declared_type = PrereqType::p1;
  friend bool operator==(const PrerequisiteBox&, const PrerequisiteBox&) = default;
};

struct LogicalPage {
  PageId id;
  std::string title;
  PageKind kind = PageKind::special_graph;
  PageStatus status = PageStatus::draft;
  std::optional<ColorCode> color;  // page-level default
  std::string definition;
  std::vector<std::string> figures;  // opaque asset references
  std::vector<Construction> constructions;
  std::vector<Property> properties;
  std::vector<PageId> related;
  std::vector<Reference> more_to_explore;
  std::string historical_notes;
  std::vector<Remark> remarks;
  std::vector<PrerequisiteBox> prereq_boxes;
  std::vector<std::string> prerequisite_courses;  // data only
  std::map<std::string, std::string> computed;    // cached verification results

  bool in_course() const { return color == ColorCode::in_course; }
  bool published() const { return status == PageStatus::published; }

  friend bool operator==(const LogicalPage&, const LogicalPage&) = default;
};

using PageIndex = std::map<PageId, LogicalPage>;

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace acgt::content
