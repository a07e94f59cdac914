#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acgt/content/fielded.hpp"
#include "acgt/content/seed.hpp"
#include "acgt/content/validate.hpp"
#include "acgt/error.hpp"
#include "acgt/workflow/student.hpp"
#include "acgt/workflow/submission.hpp"

// The whole portal as one value: content, submissions, students. Every
// operation either completes or throws with the state untouched.
namespace acgt::workflow {

struct PortalState {
  content::PageIndex pages;
  content::Corpus corpus;
  content::SyllabusMap syllabus;
  content::CourseInfo course;
  std::map<std::string, Submission> submissions;
  std::map<std::string, StudentRecord> students;
  std::vector<GroupNotice> notices;
  std::set<std::string> relevant_subjects = default_relevant_subjects();
  std::uint64_t next_submission = 1;

  friend bool operator==(const PortalState&, const PortalState&) = default;
};

inline PortalState seeded_state() {
  auto d = content::seed_data();
  PortalState s;
  s.pages = std::move(d.pages);
  s.corpus = std::move(d.corpus);
  s.syllabus = std::move(d.syllabus);
  s.course = std::move(d.course);
  return s;
}

inline std::string submission_id(std::uint64_t n) {
  std::string digits = std::to_string(n);
  return "S-" + std::string(digits.size() < 6 ? 6 - digits.size() : 0, '0') + digits;
}

inline content::PageId next_page_id(const content::PageIndex& pages) {
  unsigned next = 1;
  if (!pages.empty()) next = static_cast<unsigned>(std::stoul(pages.rbegin()->first.str().substr(5))) + 1;
  return content::PageId::from_number(next);
}

inline Submission& find_submission(PortalState& s, const std::string& id) {
  auto it = s.submissions.find(id);
  if (it == s.submissions.end()) throw Error(Errc::unknown_submission, "no submission '" + id + "'");
  return it->second;
}

inline const StudentRecord& find_student(const PortalState& s, const std::string& id) {
  auto it = s.students.find(id);
  if (it == s.students.end()) throw Error(Errc::unknown_student, "no student '" + id + "'");
  return it->second;
}

// The page a payload would produce: the target page with the fragment
// merged in, or a new page under the next free id.
inline content::LogicalPage apply_payload(const PortalState& s, const Target& target,
                                          const std::string& payload) {
  content::LogicalPage base;
  if (target.page) {
    auto it = s.pages.find(*target.page);
    if (it == s.pages.end()) throw Error(Errc::unknown_page, "no page " + target.page->str());
    base = it->second;
  } else {
    base.id = next_page_id(s.pages);
  }
  return content::merge_fragment(base, payload);
}

inline const Submission& submit(PortalState& s, const Actor& actor, Target target,
                                std::string payload, std::int64_t now, std::string note = {}) {
  apply_payload(s, target, payload);  // format and target check only
  auto id = submission_id(s.next_submission);
  auto sub = create_submission(id, actor, std::move(target), std::move(payload), now, std::move(note));
  s.submissions.emplace(id, std::move(sub));
  ++s.next_submission;
  return s.submissions.at(id);
}

// start, request-changes, approve, reject, augment (with payload).
inline const Submission& review(PortalState& s, const std::string& id, Action action,
                                const Actor& actor, std::int64_t now, std::string note = {},
                                std::optional<std::string> payload = std::nullopt) {
  if (action != Action::start_review && action != Action::request_changes &&
      action != Action::approve && action != Action::reject && action != Action::augment)
    throw Error(Errc::invalid_parameter, "not a review action: " + std::string(to_string(action)));
  auto& sub = find_submission(s, id);
  check_transition(&sub, action, actor);
  if (action == Action::augment) {
    if (!payload) throw Error(Errc::invalid_parameter, "augment needs a payload");
    apply_payload(s, sub.target, *payload);
  } else {
    payload.reset();
  }
  StudentRecord* author = nullptr;
  if (action == Action::reject) {
    if (auto it = s.students.find(sub.author); it != s.students.end()) author = &it->second;
  }
  apply_entry(sub, {actor.id, action, now, std::move(note), std::move(payload)});
  if (author) author->contribution_log.push_back({id, Outcome::rejected, std::nullopt, now});
  return sub;
}

inline const Submission& resubmit(PortalState& s, const std::string& id, const Actor& actor,
                                  std::string payload, std::int64_t now, std::string note = {}) {
  auto& sub = find_submission(s, id);
  check_transition(&sub, Action::resubmit, actor);
  apply_payload(s, sub.target, payload);
  apply_entry(sub, {actor.id, Action::resubmit, now, std::move(note), std::move(payload)});
  return sub;
}

struct PublishOutcome {
  bool published = false;
  content::PageId page;
  content::ValidationReport report;
};

// On success the page, the submission and the author's log change
// together. A page that fails validation leaves the content untouched and
// records a publish-failed entry; the submission stays Approved.
inline PublishOutcome publish(PortalState& s, const std::string& id, const Actor& actor,
                              std::int64_t now) {
  auto& sub = find_submission(s, id);
  check_transition(&sub, Action::publish, actor);
  PublishOutcome out;
  content::LogicalPage page;
  try {
    page = apply_payload(s, sub.target, sub.payload);
  } catch (const Error& e) {
    out.report.findings.push_back({"bad-payload", e.what()});
  }
  if (out.report.ok()) {
    page.status = content::PageStatus::published;
    out.report = content::validate_page(page, s.corpus, s.pages);
  }
  out.page = page.id;
  if (!out.report.ok()) {
    apply_entry(sub, {actor.id, Action::publish_failed, now, out.report.summary(), std::nullopt});
    return out;
  }
  StudentRecord* author = nullptr;
  if (auto it = s.students.find(sub.author); it != s.students.end()) author = &it->second;
  apply_entry(sub, {actor.id, Action::publish, now, page.id.str(), std::nullopt});
  sub.published_page = page.id;
  if (author) author->contribution_log.push_back({id, Outcome::published, page.id, now});
  s.pages[page.id] = std::move(page);
  out.published = true;
  return out;
}

// Adds or updates students. A changed group on an existing student raises
// a notice for instructor confirmation.
inline std::size_t import_roster(PortalState& s, const std::vector<RosterLine>& roster,
                                 std::int64_t now) {
  auto students = s.students;
  auto notices = s.notices;
  for (const auto& line : roster) {
    auto [it, inserted] = students.try_emplace(line.id);
    auto& rec = it->second;
    auto before = rec.group;
    rec.id = line.id;
    rec.name = line.name;
    rec.grades = line.grades;
    rec.recompute(s.relevant_subjects);
    if (!inserted && before != rec.group) notices.push_back({rec.id, before, rec.group, now, false});
  }
  s.students = std::move(students);
  s.notices = std::move(notices);
  return roster.size();
}

inline ContributionReport contribution_report(const PortalState& s, const std::string& student) {
  return make_report(find_student(s, student));
}

inline std::vector<const Submission*> submissions_in(const PortalState& s,
                                                     std::optional<State> state) {
  std::vector<const Submission*> out;
  for (const auto& [id, sub] : s.submissions)
    if (!state || sub.state == *state) out.push_back(&sub);
  return out;
}

}  // namespace acgt::workflow
