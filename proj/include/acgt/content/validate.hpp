#pragma once

#include <string>
#include <vector>

#include "acgt/content/corpus.hpp"
#include "acgt/content/page.hpp"

namespace acgt::content {

struct Finding {
  std::string code;  // machine-readable, e.g. "unresolved-related"
  std::string message;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const noexcept { return findings.empty(); }
  bool has(std::string_view code) const {
    for (const auto& f : findings)
      if (f.code == code) return true;
    return false;
  }
  std::string summary() const {
    std::string out;
    for (const auto& f : findings) {
      if (!out.empty()) out += "; ";
      out += f.code + ": " + f.message;
    }
    return out;
  }
};

// Checks the structural page rules. The page itself counts as an existing
// page for self-references, whether or not it is already in `index`.
inline ValidationReport validate_page(const LogicalPage& p, const Corpus& corpus,
                                      const PageIndex& index) {
  ValidationReport r;
  auto add = [&](std::string code, std::string msg) {
    r.findings.push_back({std::move(code), std::move(msg)});
  };
  if (p.id.empty()) add("missing-id", "page has no id");
  if (p.title.empty()) add("empty-title", "title is empty");
  if (p.definition.empty()) add("empty-definition", "definition is empty");
  for (const auto& rel : p.related)
    if (rel != p.id && !index.count(rel)) add("unresolved-related", rel.str() + " does not exist");
  for (std::size_t i = 0; i < p.properties.size(); ++i)
    if (!p.properties[i].color && !p.color)
      add("uncolored-property", "property " + std::to_string(i + 1) + " has no color code");
  for (std::size_t b = 0; b < p.prereq_boxes.size(); ++b) {
    const auto& box = p.prereq_boxes[b];
    std::string where = "box " + std::to_string(b + 1);
    if (box.terms.empty()) {
      add("empty-box", where + " has no terms");
      continue;
    }
    bool all_known = true;
    bool any_p2 = false;
    for (const auto& t : box.terms) {
      const auto* term = corpus.find(t);
      if (!term) {
        add("unknown-term", where + ": '" + t + "' is not in the corpus");
        all_known = false;
      } else if (term->type == PrereqType::p2) {
        any_p2 = true;
      }
    }
    if (all_known && (box.declared_type == PrereqType::p2) != any_p2)
      add("box-type-mismatch", where + " is declared " + std::string(to_string(box.declared_type)) +
                                   " but its terms make it " + (any_p2 ? "P2" : "P1"));
  }
  return r;
}

}  // namespace acgt::content
