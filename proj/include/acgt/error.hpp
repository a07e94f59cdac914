#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acgt {

// Machine-readable failure categories. The tag string doubles as the
// HTTP error "reason" and as the CLI diagnostic prefix.
enum class Errc {
  invalid_parameter,
  disconnected_graph,
  size_limit_exceeded,
  parse_error,
  unknown_term,
  unknown_page,
  unknown_student,
  unknown_submission,
  invalid_grade,
  no_relevant_grades,
  invalid_percentages,
  illegal_transition,
  forbidden_role,
  validation_failed,
  conflict,
  io_error,
  unauthenticated,
  not_found,  // no such route
};

constexpr std::string_view reason_tag(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::disconnected_graph: return "disconnected-graph";
    case Errc::size_limit_exceeded: return "size-limit-exceeded";
    case Errc::parse_error: return "parse-error";
    case Errc::unknown_term: return "unknown-term";
    case Errc::unknown_page: return "unknown-page";
    case Errc::unknown_student: return "unknown-student";
    case Errc::unknown_submission: return "unknown-submission";
    case Errc::invalid_grade: return "invalid-grade";
    case Errc::no_relevant_grades: return "no-relevant-grades";
    case Errc::invalid_percentages: return "invalid-percentages";
    case Errc::illegal_transition: return "illegal-transition";
    case Errc::forbidden_role: return "forbidden-role";
    case Errc::validation_failed: return "validation-failed";
    case Errc::conflict: return "conflict";
    case Errc::io_error: return "io-error";
    case Errc::unauthenticated: return "unauthenticated";
    case Errc::not_found: return "not-found";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(reason_tag(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view reason() const noexcept { return reason_tag(code_); }

 private:
  Errc code_;
};

// Parse failure that remembers where it happened.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string tag, const std::string& message)
      : Error(Errc::parse_error,
              "line " + std::to_string(line) +
                  (tag.empty() ? std::string() : " (" + tag + ")") + ": " +
                  message),
        line_(line),
        tag_(std::move(tag)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& tag() const noexcept { return tag_; }

 private:
  std::size_t line_;
  std::string tag_;
};

}  // namespace acgt
