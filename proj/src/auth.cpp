#include "acgt/service/auth.hpp"

#include "acgt/content/corpus.hpp"
#include "acgt/workflow/student.hpp"

namespace acgt::service {

using content::detail::split;
using content::detail::split_lines;
using content::detail::trim;

Authenticator Authenticator::static_tokens(std::string_view table) {
  Authenticator a;
  a.mode_ = Mode::static_tokens;
  auto lines = split_lines(table);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (trim(line).empty() || line.front() == '#') continue;
    auto f = split(line, '\t');
    if (f.size() < 3 || f.size() > 4 || f[0].size() < 16)
      throw ParseError(i + 1, {}, "expected token<TAB>id<TAB>role<TAB>courses, tokens of 16+ chars");
    auto role = workflow::parse_role(f[2]);
    if (!role) throw ParseError(i + 1, std::string(f[2]), "unknown role");
    Principal p{std::string(f[1]), *role, {}};
    if (f.size() == 4)
      for (auto c : split(f[3], ','))
        if (!trim(c).empty()) p.courses.emplace(trim(c));
    if (!a.tokens_.emplace(std::string(f[0]), std::move(p)).second)
      throw ParseError(i + 1, {}, "duplicate token");
  }
  return a;
}

Authenticator Authenticator::dev(std::set<std::string> courses) {
  Authenticator a;
  a.mode_ = Mode::dev;
  a.dev_courses_ = std::move(courses);
  return a;
}

std::optional<Principal> Authenticator::authenticate(std::string_view token) const {
  if (mode_ == Mode::static_tokens) {
    auto it = tokens_.find(token);
    if (it == tokens_.end()) return std::nullopt;
    return it->second;
  }
  if (token.substr(0, 4) != "dev-") return std::nullopt;
  auto rest = token.substr(4);
  auto dash = rest.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  auto role = workflow::parse_role(rest.substr(0, dash));
  auto id = rest.substr(dash + 1);
  if (!role || !workflow::valid_student_id(id)) return std::nullopt;
  return Principal{std::string(id), *role, dev_courses_};
}

std::optional<std::string> Authenticator::bearer(std::string_view header) {
  constexpr std::string_view prefix = "Bearer ";
  if (header.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto token = trim(header.substr(prefix.size()));
  if (token.empty()) return std::nullopt;
  return std::string(token);
}

}  // namespace acgt::service
