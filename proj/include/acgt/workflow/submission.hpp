#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/content/page.hpp"
#include "acgt/error.hpp"

namespace acgt::workflow {

enum class Role { student, moderator, instructor, admin };

inline std::string_view to_string(Role r) {
  switch (r) {
    case Role::student: return "student";
    case Role::moderator: return "moderator";
    case Role::instructor: return "instructor";
    case Role::admin: return "admin";
  }
  return "";
}

inline std::optional<Role> parse_role(std::string_view s) {
  for (auto r : {Role::student, Role::moderator, Role::instructor, Role::admin})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

inline bool at_least(Role have, Role need) {
  return static_cast<int>(have) >= static_cast<int>(need);
}

struct Actor {
  std::string id;
  Role role = Role::student;
};

enum class State { submitted, in_review, changes_requested, approved, rejected, published };

inline std::string_view to_string(State s) {
  switch (s) {
    case State::submitted: return "Submitted";
    case State::in_review: return "InReview";
    case State::changes_requested: return "ChangesRequested";
    case State::approved: return "Approved";
    case State::rejected: return "Rejected";
    case State::published: return "Published";
  }
  return "";
}

inline std::optional<State> parse_state(std::string_view s) {
  for (auto st : {State::submitted, State::in_review, State::changes_requested, State::approved,
                  State::rejected, State::published})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

enum class Action {
  submit,
  start_review,
  request_changes,
  approve,
  reject,
  resubmit,
  augment,  // moderator edits the payload during review
  publish,
  publish_failed,
};

inline std::string_view to_string(Action a) {
  switch (a) {
    case Action::submit: return "submit";
    case Action::start_review: return "start";
    case Action::request_changes: return "request-changes";
    case Action::approve: return "approve";
    case Action::reject: return "reject";
    case Action::resubmit: return "resubmit";
    case Action::augment: return "augment";
    case Action::publish: return "publish";
    case Action::publish_failed: return "publish-failed";
  }
  return "";
}

inline std::optional<Action> parse_action(std::string_view s) {
  for (auto a : {Action::submit, Action::start_review, Action::request_changes, Action::approve,
                 Action::reject, Action::resubmit, Action::augment, Action::publish,
                 Action::publish_failed})
    if (to_string(a) == s) return a;
  return std::nullopt;
}

// What a submission changes: attributes of an existing page, or a new page.
struct Target {
  std::optional<content::PageId> page;  // empty for a new-page proposal
  std::string attribute;                // informational, e.g. "properties"
  friend bool operator==(const Target&, const Target&) = default;
};

struct HistoryEntry {
  std::string actor;
  Action action = Action::submit;
  std::int64_t timestamp = 0;  // seconds since the epoch
  std::string note;
  std::optional<std::string> payload;  // set by submit, resubmit and augment
  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

struct Submission {
  std::string id;
  std::string author;
  Target target;
  std::string payload;  // fielded-format fragment
  State state = State::submitted;
  std::vector<HistoryEntry> history;
  std::optional<content::PageId> published_page;
  friend bool operator==(const Submission&, const Submission&) = default;
};

struct TransitionRule {
  Action action;
  std::optional<State> from;  // empty: creates the submission
  State to;
  Role min_role;
};

inline constexpr TransitionRule kTransitions[] = {
    {Action::submit, std::nullopt, State::submitted, Role::student},
    {Action::start_review, State::submitted, State::in_review, Role::moderator},
    {Action::request_changes, State::in_review, State::changes_requested, Role::moderator},
    {Action::approve, State::in_review, State::approved, Role::moderator},
    {Action::reject, State::in_review, State::rejected, Role::moderator},
    {Action::resubmit, State::changes_requested, State::submitted, Role::student},
    {Action::augment, State::in_review, State::in_review, Role::moderator},
    {Action::publish, State::approved, State::published, Role::moderator},
    {Action::publish_failed, State::approved, State::approved, Role::moderator},
};

inline const TransitionRule& rule_for(Action a) {
  for (const auto& r : kTransitions)
    if (r.action == a) return r;
  throw Error(Errc::invalid_parameter, "unknown action");
}

// Checks role, then state. Resubmission is reserved for the author.
inline void check_transition(const Submission* s, Action a, const Actor& actor) {
  const auto& rule = rule_for(a);
  if (!at_least(actor.role, rule.min_role))
    throw Error(Errc::forbidden_role, std::string(to_string(actor.role)) + " may not " +
                                          std::string(to_string(a)));
  if (a == Action::resubmit && s && s->author != actor.id)
    throw Error(Errc::forbidden_role, "only the author may resubmit");
  if (!rule.from) {
    if (s) throw Error(Errc::conflict, "submission already exists");
    return;
  }
  if (!s) throw Error(Errc::unknown_submission, "no such submission");
  if (s->state != *rule.from)
    throw Error(Errc::illegal_transition, std::string(to_string(a)) + " is not allowed in state " +
                                              std::string(to_string(s->state)));
}

// Applies one history entry. The entry is appended; entries already in the
// history are never touched.
inline void apply_entry(Submission& s, const HistoryEntry& e) {
  const auto& rule = rule_for(e.action);
  if (rule.from && s.state != *rule.from)
    throw Error(Errc::illegal_transition, "history entry does not fit the current state");
  s.state = rule.to;
  if (e.payload) s.payload = *e.payload;
  s.history.push_back(e);
}

inline Submission create_submission(std::string id, const Actor& author, Target target,
                                    std::string payload, std::int64_t now, std::string note = {}) {
  check_transition(nullptr, Action::submit, author);
  Submission s;
  s.id = std::move(id);
  s.author = author.id;
  s.target = std::move(target);
  apply_entry(s, {author.id, Action::submit, now, std::move(note), std::move(payload)});
  return s;
}

// Rebuilds state and payload from the history alone.
inline Submission replay(const Submission& s) {
  Submission r;
  r.id = s.id;
  r.author = s.author;
  r.target = s.target;
  r.published_page = s.published_page;
  if (s.history.empty() || s.history.front().action != Action::submit)
    throw Error(Errc::invalid_parameter, "history must start with submit");
  for (const auto& e : s.history) {
    if (e.action == Action::submit && !r.history.empty())
      throw Error(Errc::invalid_parameter, "submit appears twice");
    apply_entry(r, e);
  }
  return r;
}

}  // namespace acgt::workflow
