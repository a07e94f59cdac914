#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "acgt/workflow/submission.hpp"

namespace acgt::service {

struct Principal {
  std::string id;
  workflow::Role role = workflow::Role::student;
  std::set<std::string> courses;  // roster membership

  workflow::Actor actor() const { return {id, role}; }
};

// Maps bearer tokens to principals.
//
// static: tokens come from a table "token<TAB>id<TAB>role<TAB>course,course".
// dev:    any token "dev-<role>-<id>" is accepted, enrolled in every course
//         the authenticator was told about. Never for production use.
class Authenticator {
 public:
  enum class Mode { static_tokens, dev };

  static Authenticator static_tokens(std::string_view table);
  static Authenticator dev(std::set<std::string> courses);

  Mode mode() const noexcept { return mode_; }
  std::optional<Principal> authenticate(std::string_view token) const;

  // Pulls the token out of an "Authorization: Bearer <token>" header.
  static std::optional<std::string> bearer(std::string_view header);

 private:
  Mode mode_ = Mode::static_tokens;
  std::map<std::string, Principal, std::less<>> tokens_;
  std::set<std::string> dev_courses_;
};

}  // namespace acgt::service
