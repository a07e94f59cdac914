#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/content/corpus.hpp"
#include "acgt/content/page.hpp"
#include "acgt/error.hpp"
#include "acgt/families.hpp"

// Fielded page format.
//
//   %TAG value                 one record per tag line
//   %TAG(argument) value       argument escapes: \\  \)  \n
//     continuation             further value lines, indented two spaces
//
// Tags: ID TITLE KIND STATUS COLOR DEF FIG CONS(family-spec)
// PROP(color) REL MORE(url) HIST REMARK(author) PREREQ(P1|P2)
// COURSE COMPUTED(key). Blank lines between records are ignored; a blank
// line inside a value is written as two spaces.
namespace acgt::content {

struct FieldRecord {
  std::string tag;
  std::optional<std::string> arg;
  std::string value;
  std::size_t line = 0;
};

namespace fielded {

enum class ArgRule { none, optional, required };

struct TagRule {
  std::string_view tag;
  ArgRule arg;
  bool repeated;
};

inline constexpr std::array<TagRule, 16> kTags{{
    {"ID", ArgRule::none, false},
    {"TITLE", ArgRule::none, false},
    {"KIND", ArgRule::none, false},
    {"STATUS", ArgRule::none, false},
    {"COLOR", ArgRule::none, false},
    {"DEF", ArgRule::none, false},
    {"FIG", ArgRule::none, true},
    {"CONS", ArgRule::optional, true},
    {"PROP", ArgRule::optional, true},
    {"REL", ArgRule::none, true},
    {"MORE", ArgRule::optional, true},
    {"HIST", ArgRule::none, false},
    {"REMARK", ArgRule::required, true},
    {"PREREQ", ArgRule::required, true},
    {"COURSE", ArgRule::none, true},
    {"COMPUTED", ArgRule::required, true},
}};

inline const TagRule* find_rule(std::string_view tag) {
  for (const auto& r : kTags)
    if (r.tag == tag) return &r;
  return nullptr;
}

inline std::string escape_arg(std::string_view arg) {
  std::string out;
  for (char c : arg) {
    if (c == '\\' || c == ')') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

inline void write_record(std::string& out, std::string_view tag,
                         const std::optional<std::string>& arg, std::string_view value) {
  out += '%';
  out += tag;
  if (arg) {
    out += '(';
    out += escape_arg(*arg);
    out += ')';
  }
  std::size_t pos = 0;
  bool first = true;
  while (true) {
    auto nl = value.find('\n', pos);
    auto line = value.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    if (first) {
      if (!line.empty()) {
        out += ' ';
        out += line;
      }
      first = false;
    } else {
      out += "\n  ";
      out += line;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  out += '\n';
}

inline std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += "; ";
    out += terms[i];
  }
  return out;
}

}  // namespace fielded

// Splits fielded text into records. Unknown tags, malformed arguments and
// stray lines raise ParseError with the offending line number and tag.
inline std::vector<FieldRecord> parse_records(std::string_view text) {
  std::vector<FieldRecord> records;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;

    if (line.empty()) continue;
    if (line.size() >= 2 && line[0] == ' ' && line[1] == ' ') {
      if (records.empty()) throw ParseError(line_no, {}, "continuation line before any record");
      records.back().value += '\n';
      records.back().value += line.substr(2);
      continue;
    }
    if (line[0] != '%') throw ParseError(line_no, {}, "expected a %TAG record");

    std::size_t i = 1;
    while (i < line.size() && line[i] >= 'A' && line[i] <= 'Z') ++i;
    std::string tag(line.substr(1, i - 1));
    std::size_t tag_end = i;
    while (tag_end < line.size() && line[tag_end] != ' ' && line[tag_end] != '(') ++tag_end;
    std::string shown = "%" + std::string(line.substr(1, tag_end - 1));
    const auto* rule = fielded::find_rule(tag);
    if (!rule || tag_end != i) throw ParseError(line_no, shown, "unknown field tag");

    FieldRecord rec{tag, std::nullopt, {}, line_no};
    if (i < line.size() && line[i] == '(') {
      std::string arg;
      bool closed = false;
      for (++i; i < line.size(); ++i) {
        char c = line[i];
        if (c == '\\') {
          if (++i == line.size()) break;
          char e = line[i];
          if (e == 'n') arg += '\n';
          else if (e == '\\' || e == ')') arg += e;
          else throw ParseError(line_no, shown, "bad escape in argument");
        } else if (c == ')') {
          closed = true;
          ++i;
          break;
        } else {
          arg += c;
        }
      }
      if (!closed) throw ParseError(line_no, shown, "unterminated argument");
      rec.arg = std::move(arg);
    }
    if (i < line.size()) {
      if (line[i] != ' ') throw ParseError(line_no, shown, "expected a space before the value");
      rec.value = std::string(line.substr(i + 1));
    }
    if (rule->arg == fielded::ArgRule::none && rec.arg)
      throw ParseError(line_no, shown, "tag takes no argument");
    if (rule->arg == fielded::ArgRule::required && !rec.arg)
      throw ParseError(line_no, shown, "tag requires an argument");
    records.push_back(std::move(rec));
  }
  return records;
}

namespace fielded {

// Applies one record to a page. Single-valued tags replace, repeated tags
// append. `seen` tracks single-valued tags for duplicate detection.
inline void apply_record(LogicalPage& page, const FieldRecord& rec, std::set<std::string>* seen) {
  const std::string shown = "%" + rec.tag;
  const auto* rule = find_rule(rec.tag);
  if (seen && !rule->repeated && !seen->insert(rec.tag).second)
    throw ParseError(rec.line, shown, "duplicate single-valued tag");
  auto bad = [&](const std::string& what) { return ParseError(rec.line, shown, what); };

  if (rec.tag == "ID") {
    if (!PageId::valid(rec.value)) throw bad("malformed page id '" + rec.value + "'");
    page.id = PageId::parse(rec.value);
  } else if (rec.tag == "TITLE") {
    page.title = rec.value;
  } else if (rec.tag == "KIND") {
    auto k = parse_kind(rec.value);
    if (!k) throw bad("unknown kind '" + rec.value + "'");
    page.kind = *k;
  } else if (rec.tag == "STATUS") {
    auto s = parse_status(rec.value);
    if (!s) throw bad("unknown status '" + rec.value + "'");
    page.status = *s;
  } else if (rec.tag == "COLOR") {
    auto c = parse_color(rec.value);
    if (!c) throw bad("unknown color '" + rec.value + "'");
    page.color = *c;
  } else if (rec.tag == "DEF") {
    page.definition = rec.value;
  } else if (rec.tag == "FIG") {
    page.figures.push_back(rec.value);
  } else if (rec.tag == "CONS") {
    Construction c{rec.value, std::nullopt};
    if (rec.arg) {
      try {
        c.binding = parse_family_spec(*rec.arg);
      } catch (const Error& e) {
        throw bad(e.what());
      }
    }
    page.constructions.push_back(std::move(c));
  } else if (rec.tag == "PROP") {
    Property p{rec.value, std::nullopt};
    if (rec.arg) {
      p.color = parse_color(*rec.arg);
      if (!p.color) throw bad("unknown color '" + *rec.arg + "'");
    }
    page.properties.push_back(std::move(p));
  } else if (rec.tag == "REL") {
    if (!PageId::valid(rec.value)) throw bad("malformed page id '" + rec.value + "'");
    page.related.push_back(PageId::parse(rec.value));
  } else if (rec.tag == "MORE") {
    page.more_to_explore.push_back({rec.value, rec.arg.value_or("")});
  } else if (rec.tag == "HIST") {
    page.historical_notes = rec.value;
  } else if (rec.tag == "REMARK") {
    page.remarks.push_back({*rec.arg, rec.value});
  } else if (rec.tag == "PREREQ") {
    auto type = parse_prereq_type(*rec.arg);
    if (!type) throw bad("prerequisite type must be P1 or P2");
    PrerequisiteBox box{{}, *type};
    for (auto part : content::detail::split(rec.value, ';')) {
      auto t = content::detail::trim(part);
      if (!t.empty()) box.terms.emplace_back(t);
    }
    page.prereq_boxes.push_back(std::move(box));
  } else if (rec.tag == "COURSE") {
    page.prerequisite_courses.push_back(rec.value);
  } else if (rec.tag == "COMPUTED") {
    page.computed[*rec.arg] = rec.value;
  }
}

}  // namespace fielded

inline std::string export_page(const LogicalPage& p) {
  using fielded::write_record;
  std::string out;
  const std::optional<std::string> none;
  write_record(out, "ID", none, p.id.str());
  write_record(out, "TITLE", none, p.title);
  write_record(out, "KIND", none, to_string(p.kind));
  write_record(out, "STATUS", none, to_string(p.status));
  if (p.color) write_record(out, "COLOR", none, to_string(*p.color));
  write_record(out, "DEF", none, p.definition);
  for (const auto& f : p.figures) write_record(out, "FIG", none, f);
  for (const auto& c : p.constructions)
    write_record(out, "CONS",
                 c.binding ? std::optional<std::string>(acgt::to_string(*c.binding)) : none,
                 c.text);
  for (const auto& prop : p.properties)
    write_record(out, "PROP",
                 prop.color ? std::optional<std::string>(std::string(to_string(*prop.color)))
                            : none,
                 prop.text);
  for (const auto& r : p.related) write_record(out, "REL", none, r.str());
  for (const auto& m : p.more_to_explore)
    write_record(out, "MORE", m.url.empty() ? none : std::optional<std::string>(m.url), m.text);
  if (!p.historical_notes.empty()) write_record(out, "HIST", none, p.historical_notes);
  for (const auto& r : p.remarks) write_record(out, "REMARK", r.author, r.text);
  for (const auto& b : p.prereq_boxes)
    write_record(out, "PREREQ", std::string(to_string(b.declared_type)),
                 fielded::join_terms(b.terms));
  for (const auto& c : p.prerequisite_courses) write_record(out, "COURSE", none, c);
  for (const auto& [key, value] : p.computed) write_record(out, "COMPUTED", key, value);
  return out;
}

inline LogicalPage import_page(std::string_view text) {
  LogicalPage page;
  std::set<std::string> seen;
  for (const auto& rec : parse_records(text)) fielded::apply_record(page, rec, &seen);
  if (!seen.count("ID")) throw ParseError(1, "%ID", "page has no %ID record");
  return page;
}

// Applies a contribution fragment to an existing page: single-valued tags
// replace, repeated tags append. A %ID record, if present, must name the
// same page.
inline LogicalPage merge_fragment(const LogicalPage& base, std::string_view fragment) {
  LogicalPage page = base;
  std::set<std::string> seen;
  for (const auto& rec : parse_records(fragment)) {
    if (rec.tag == "ID") {
      if (rec.value != base.id.str())
        throw ParseError(rec.line, "%ID", "fragment targets a different page");
      continue;
    }
    fielded::apply_record(page, rec, &seen);
  }
  return page;
}

}  // namespace acgt::content
