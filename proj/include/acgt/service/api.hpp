#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/service/auth.hpp"
#include "acgt/service/store.hpp"

namespace acgt::service {

struct Request {
  std::string method;         // "GET", "POST"
  std::string target;         // raw path plus query, e.g. "/search?q=wheel"
  std::string body;
  std::string authorization;  // raw Authorization header, may be empty
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Who may call a route. Checked before the handler runs.
enum class Access {
  open,                 // no token needed
  any,                  // any authenticated principal
  moderator,            // moderator, instructor or admin
  instructor,           // instructor or admin
  admin,
  self_or_instructor,   // the student named in the path, or instructor+
  author_or_moderator,  // the submission's author, or moderator+
  author,               // the submission's author only
};

std::string_view to_string(Access a);

struct RouteInfo {
  std::string method;
  std::string pattern;  // "/submissions/{id}/review"
  Access access;
};

int http_status(Errc code);

// Framework-free request router: the HTTP server and the tests both feed it
// Request values. Error bodies are {"error": <reason tag>, "message": ...}.
class Api {
 public:
  using Clock = std::function<std::int64_t()>;

  Api(Store& store, Authenticator auth, Clock clock = {});

  Response handle(const Request& req) const;

  static const std::vector<RouteInfo>& routes();

  struct Call;  // per-request context, defined with the handlers

 private:
  Store& store_;
  Authenticator auth_;
  Clock clock_;
};

std::string percent_decode(std::string_view s, bool plus_is_space);
std::map<std::string, std::string> parse_query(std::string_view query);
bool valid_utf8(std::string_view s);

}  // namespace acgt::service
