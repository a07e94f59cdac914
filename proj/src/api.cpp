#include "acgt/service/api.hpp"

#include <chrono>
#include <charconv>

#include "acgt/content/queries.hpp"
#include "acgt/distance.hpp"
#include "acgt/edge_list.hpp"
#include "acgt/families.hpp"
#include "acgt/odd_wiener.hpp"
#include "acgt/workflow/plan.hpp"

namespace acgt::service {

namespace {

using workflow::Role;

constexpr std::size_t kMaxGenerateOrder = 200000;
constexpr std::size_t kMaxWienerOrder = 2048;

Response json_response(int status, const Json& j) { return {status, j.dump(2) + "\n", "application/json"}; }

Response error_response(Errc code, std::string_view message, Json extra = Json::object()) {
  extra["error"] = std::string(reason_tag(code));
  extra["message"] = std::string(message);
  return json_response(http_status(code), extra);
}

Json parse_body(const std::string& body) {
  if (body.empty()) return Json::object();
  try {
    auto j = Json::parse(body);
    if (!j.is_object()) throw Error(Errc::invalid_parameter, "request body must be a JSON object");
    return j;
  } catch (const Json::exception& e) {
    throw Error(Errc::invalid_parameter, std::string("malformed JSON body: ") + e.what());
  }
}

std::string string_field(const Json& body, const char* key, bool required = true) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) {
    if (required) throw Error(Errc::invalid_parameter, std::string("missing field '") + key + "'");
    return {};
  }
  if (!it->is_string()) throw Error(Errc::invalid_parameter, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(Errc::invalid_parameter, std::string(what) + " must be an integer");
  return v;
}

content::PageId page_id_param(const std::string& text) {
  if (!content::PageId::valid(text)) throw Error(Errc::unknown_page, "no page " + text);
  return content::PageId::parse(text);
}

}  // namespace

std::string_view to_string(Access a) {
  switch (a) {
    case Access::open: return "open";
    case Access::any: return "any";
    case Access::moderator: return "moderator";
    case Access::instructor: return "instructor";
    case Access::admin: return "admin";
    case Access::self_or_instructor: return "self-or-instructor";
    case Access::author_or_moderator: return "author-or-moderator";
    case Access::author: return "author";
  }
  return "";
}

int http_status(Errc code) {
  switch (code) {
    case Errc::unknown_term:
    case Errc::unknown_page:
    case Errc::unknown_student:
    case Errc::unknown_submission:
    case Errc::not_found: return 404;
    case Errc::illegal_transition:
    case Errc::conflict: return 409;
    case Errc::forbidden_role: return 403;
    case Errc::unauthenticated: return 401;
    case Errc::io_error: return 500;
    default: return 400;
  }
}

std::string percent_decode(std::string_view s, bool plus_is_space) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%') {
      int hi = i + 1 < s.size() ? hex(s[i + 1]) : -1;
      int lo = i + 2 < s.size() ? hex(s[i + 2]) : -1;
      if (hi < 0 || lo < 0) throw Error(Errc::invalid_parameter, "bad percent escape");
      out += static_cast<char>(hi * 16 + lo);
      i += 2;
    } else if (plus_is_space && s[i] == '+') {
      out += ' ';
    } else {
      out += s[i];
    }
  }
  return out;
}

std::map<std::string, std::string> parse_query(std::string_view query) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= query.size() && !query.empty()) {
    auto amp = query.find('&', pos);
    auto part = query.substr(pos, amp == std::string_view::npos ? amp : amp - pos);
    if (!part.empty()) {
      auto eq = part.find('=');
      auto key = percent_decode(part.substr(0, eq), true);
      auto value = eq == std::string_view::npos ? std::string() : percent_decode(part.substr(eq + 1), true);
      out[key] = value;
    }
    if (amp == std::string_view::npos) break;
    pos = amp + 1;
  }
  return out;
}

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xe ? 3 : (c >> 3) == 0x1e ? 4 : 0;
    if (len == 0 || i + len > s.size()) return false;
    std::uint32_t cp = len == 1 ? c : c & (0x3f >> (len - 1));
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc >> 6) != 0x2) return false;
      cp = (cp << 6) | (cc & 0x3f);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && (cp < 0x10000 || cp > 0x10ffff)) ||
        (cp >= 0xd800 && cp <= 0xdfff))
      return false;
    i += len;
  }
  return true;
}

struct Api::Call {
  const Api& api;
  const Principal* who;  // null on open routes
  std::vector<std::string> params;
  std::map<std::string, std::string> query;
  const std::string& body;
  Store::Snapshot snap;

  std::int64_t now() const { return api.clock_(); }
  Store& store() const { return api.store_; }
  bool at_least(Role r) const { return who && workflow::at_least(who->role, r); }
  const std::string* q(const char* key) const {
    auto it = query.find(key);
    return it == query.end() ? nullptr : &it->second;
  }
};

namespace {

using Handler = Response (*)(const Api::Call&);

struct Route {
  const char* method;
  const char* pattern;
  Access access;
  Handler handler;
};

FamilySpec spec_from_query(const Api::Call& c) {
  const auto* family = c.q("family");
  if (!family) throw Error(Errc::invalid_parameter, "missing query parameter 'family'");
  const auto* params = c.q("params");
  FamilySpec spec{parse_family(*family), params && !params->empty() ? parse_params(*params)
                                                                    : std::vector<std::int64_t>{}};
  validate(spec);
  return spec;
}

Response health(const Api::Call&) { return json_response(200, {{"status", "ok"}}); }

Response list_pages(const Api::Call& c) {
  Json out = Json::array();
  bool drafts = c.at_least(Role::moderator);
  for (const auto& [id, page] : c.snap->pages)
    if (drafts || page.published()) out.push_back(page_summary(page));
  return json_response(200, {{"pages", out}});
}

const content::LogicalPage& visible_page(const Api::Call& c, const std::string& text) {
  auto id = page_id_param(text);
  auto it = c.snap->pages.find(id);
  if (it == c.snap->pages.end() || (!it->second.published() && !c.at_least(Role::moderator)))
    throw Error(Errc::unknown_page, "no page " + text);
  return it->second;
}

Response get_page(const Api::Call& c) {
  const auto& page = visible_page(c, c.params[0]);
  if (const auto* fmt = c.q("format"); fmt && *fmt == "fielded")
    return {200, content::export_page(page), "text/plain; charset=utf-8"};
  return json_response(200, to_json(page));
}

Response page_relevance(const Api::Call& c) {
  const auto& page = visible_page(c, c.params[0]);
  auto r = content::relevance(page, c.snap->syllabus, c.snap->corpus);
  return json_response(200, {{"page", page.id.str()},
                             {"relevance", acgt::to_string(r)},
                             {"value", static_cast<double>(r)}});
}

Response search_pages(const Api::Call& c) {
  const auto* q = c.q("q");
  Json hits = Json::array();
  for (const auto& h : content::search(q ? *q : "", c.snap->pages))
    hits.push_back({{"id", h.id.str()}, {"title", c.snap->pages.at(h.id).title}, {"score", h.score}});
  return json_response(200, {{"query", q ? *q : ""}, {"results", hits}});
}

Response backlinks(const Api::Call& c) {
  Json ids = Json::array();
  for (const auto& id : content::backward_links(c.params[0], c.snap->corpus, c.snap->pages))
    ids.push_back(id.str());
  return json_response(200, {{"term", c.params[0]}, {"pages", ids}});
}

Response course(const Api::Call& c) {
  const auto& info = c.snap->course;
  if (c.who->role == Role::student && !c.who->courses.count(info.id))
    throw Error(Errc::forbidden_role, "not enrolled in " + info.id);
  return json_response(200, to_json(info));
}

Response create_submission(const Api::Call& c) {
  auto body = parse_body(c.body);
  workflow::Target target;
  if (auto page = string_field(body, "target", false); !page.empty()) target.page = page_id_param(page);
  target.attribute = string_field(body, "attribute", false);
  auto payload = string_field(body, "payload");
  auto note = string_field(body, "note", false);
  Json out;
  c.store().mutate([&](workflow::PortalState& s) {
    out = to_json(workflow::submit(s, c.who->actor(), target, payload, c.now(), note));
  });
  return json_response(201, out);
}

Response list_submissions(const Api::Call& c) {
  std::optional<workflow::State> state;
  if (const auto* st = c.q("state"); st && !st->empty()) {
    state = workflow::parse_state(*st);
    if (!state) throw Error(Errc::invalid_parameter, "unknown state '" + *st + "'");
  }
  Json out = Json::array();
  for (const auto* sub : workflow::submissions_in(*c.snap, state)) out.push_back(to_json(*sub));
  return json_response(200, {{"submissions", out}});
}

Response get_submission(const Api::Call& c) {
  auto it = c.snap->submissions.find(c.params[0]);
  return json_response(200, to_json(it->second));
}

Response review_submission(const Api::Call& c) {
  auto body = parse_body(c.body);
  auto name = string_field(body, "action");
  auto action = workflow::parse_action(name);
  if (!action) throw Error(Errc::invalid_parameter, "unknown review action '" + name + "'");
  std::optional<std::string> payload;
  if (body.contains("payload") && !body["payload"].is_null()) payload = string_field(body, "payload");
  auto note = string_field(body, "note", false);
  Json out;
  c.store().mutate([&](workflow::PortalState& s) {
    out = to_json(workflow::review(s, c.params[0], *action, c.who->actor(), c.now(), note, payload));
  });
  return json_response(200, out);
}

Response resubmit_submission(const Api::Call& c) {
  auto body = parse_body(c.body);
  auto payload = string_field(body, "payload");
  auto note = string_field(body, "note", false);
  Json out;
  c.store().mutate([&](workflow::PortalState& s) {
    out = to_json(workflow::resubmit(s, c.params[0], c.who->actor(), payload, c.now(), note));
  });
  return json_response(200, out);
}

Response publish_submission(const Api::Call& c) {
  workflow::PublishOutcome outcome;
  Json sub;
  c.store().mutate([&](workflow::PortalState& s) {
    outcome = workflow::publish(s, c.params[0], c.who->actor(), c.now());
    sub = to_json(s.submissions.at(c.params[0]));
  });
  if (!outcome.published) {
    Json findings = Json::array();
    for (const auto& f : outcome.report.findings) findings.push_back({{"code", f.code}, {"message", f.message}});
    return error_response(Errc::validation_failed, outcome.report.summary(),
                          {{"findings", findings}, {"submission", sub}});
  }
  return json_response(200, {{"page", outcome.page.str()}, {"submission", sub}});
}

Response student_log(const Api::Call& c) {
  return json_response(200, to_json(workflow::contribution_report(*c.snap, c.params[0])));
}

Response import_roster(const Api::Call& c) {
  std::string text = c.body;
  if (!text.empty() && text.front() == '{') text = string_field(parse_body(text), "roster");
  if (!valid_utf8(text)) throw Error(Errc::invalid_parameter, "roster must be UTF-8");
  auto lines = workflow::parse_roster(text);
  std::size_t notices_before = 0;
  Json notices = Json::array();
  c.store().mutate([&](workflow::PortalState& s) {
    notices_before = s.notices.size();
    workflow::import_roster(s, lines, c.now());
    for (std::size_t i = notices_before; i < s.notices.size(); ++i) notices.push_back(to_json(s.notices[i]));
  });
  return json_response(200, {{"imported", lines.size()}, {"notices", notices}});
}

Response list_notices(const Api::Call& c) {
  Json out = Json::array();
  for (std::size_t i = 0; i < c.snap->notices.size(); ++i) {
    auto j = to_json(c.snap->notices[i]);
    j["index"] = i;
    out.push_back(j);
  }
  return json_response(200, {{"notices", out}});
}

Response confirm_notice(const Api::Call& c) {
  auto index = parse_int(c.params[0], "notice index");
  Json out;
  c.store().mutate([&](workflow::PortalState& s) {
    if (index < 0 || static_cast<std::size_t>(index) >= s.notices.size())
      throw Error(Errc::not_found, "no notice " + c.params[0]);
    s.notices[static_cast<std::size_t>(index)].confirmed = true;
    out = to_json(s.notices[static_cast<std::size_t>(index)]);
  });
  return json_response(200, out);
}

Response plan_exercises(const Api::Call& c) {
  auto body = parse_body(c.body);
  workflow::GroupShares shares;
  auto it = body.find("pcts");
  if (it == body.end()) throw Error(Errc::invalid_parameter, "missing field 'pcts'");
  if (it->is_string()) {
    shares = workflow::parse_group_shares(it->get<std::string>());
  } else if (it->is_array() && it->size() == workflow::kGroups) {
    std::string joined;
    for (const auto& v : *it) {
      if (!joined.empty()) joined += ',';
      joined += v.is_string() ? v.get<std::string>() : v.dump();
    }
    shares = workflow::parse_group_shares(joined);
  } else {
    throw Error(Errc::invalid_percentages, "'pcts' must be a string or an array of three shares");
  }
  auto total = body.find("total");
  if (total == body.end() || !total->is_number_integer() || total->get<std::int64_t>() < 1)
    throw Error(Errc::invalid_parameter, "'total' must be a positive integer");
  return json_response(200, to_json(workflow::plan_exercises(shares, total->get<std::uint64_t>())));
}

Response compute_generate(const Api::Call& c) {
  auto spec = spec_from_query(c);
  auto g = generate(spec);
  if (g.order() > kMaxGenerateOrder)
    throw Error(Errc::size_limit_exceeded, "instance has more than " + std::to_string(kMaxGenerateOrder) + " vertices");
  return json_response(200, {{"family", acgt::to_string(spec)},
                             {"order", g.order()},
                             {"size", g.size()},
                             {"edge_list", write_edge_list(g)}});
}

Response compute_wiener(const Api::Call& c) {
  auto spec = spec_from_query(c);
  auto g = generate(spec);
  if (g.order() > kMaxWienerOrder)
    throw Error(Errc::size_limit_exceeded, "Wiener index is served for at most " + std::to_string(kMaxWienerOrder) + " vertices");
  auto w = wiener(g);
  return json_response(200, {{"family", acgt::to_string(spec)},
                             {"order", g.order()},
                             {"size", g.size()},
                             {"wiener", w.str()}});
}

Response compute_verify(const Api::Call& c) {
  std::int64_t max_n = 17;
  if (const auto* m = c.q("max_n"); m && !m->empty()) max_n = parse_int(*m, "max_n");
  return json_response(200, to_json(verify_a136328(max_n)));
}

const Route kRoutes[] = {
    {"GET", "/health", Access::open, health},
    {"GET", "/pages", Access::any, list_pages},
    {"GET", "/pages/{id}", Access::any, get_page},
    {"GET", "/pages/{id}/relevance", Access::any, page_relevance},
    {"GET", "/search", Access::any, search_pages},
    {"GET", "/terms/{term}/backlinks", Access::any, backlinks},
    {"GET", "/course", Access::any, course},
    {"POST", "/submissions", Access::any, create_submission},
    {"GET", "/submissions", Access::moderator, list_submissions},
    {"GET", "/submissions/{id}", Access::author_or_moderator, get_submission},
    {"POST", "/submissions/{id}/review", Access::moderator, review_submission},
    {"POST", "/submissions/{id}/resubmit", Access::author, resubmit_submission},
    {"POST", "/submissions/{id}/publish", Access::moderator, publish_submission},
    {"GET", "/students/{id}/log", Access::self_or_instructor, student_log},
    {"POST", "/roster", Access::admin, import_roster},
    {"GET", "/notices", Access::instructor, list_notices},
    {"POST", "/notices/{n}/confirm", Access::instructor, confirm_notice},
    {"POST", "/plan/exercises", Access::instructor, plan_exercises},
    {"GET", "/compute/generate", Access::any, compute_generate},
    {"GET", "/compute/wiener", Access::any, compute_wiener},
    {"GET", "/compute/verify-a136328", Access::any, compute_verify},
};

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t pos = 1;
  while (pos <= path.size()) {
    auto slash = path.find('/', pos);
    auto seg = path.substr(pos, slash == std::string_view::npos ? slash : slash - pos);
    parts.push_back(percent_decode(seg, false));
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return parts;
}

bool match(const Route& r, const std::vector<std::string>& segs, std::vector<std::string>& params) {
  auto pat = split_path(r.pattern);
  if (pat.size() != segs.size()) return false;
  params.clear();
  for (std::size_t i = 0; i < pat.size(); ++i) {
    if (!pat[i].empty() && pat[i].front() == '{') {
      if (segs[i].empty()) return false;
      params.push_back(segs[i]);
    } else if (pat[i] != segs[i]) {
      return false;
    }
  }
  return true;
}

void check_access(const Route& r, const Principal& who, const std::vector<std::string>& params,
                  const workflow::PortalState& state) {
  auto need = [&](Role role) {
    if (!workflow::at_least(who.role, role))
      throw Error(Errc::forbidden_role, std::string(workflow::to_string(who.role)) + " may not call " +
                                            r.method + " " + r.pattern);
  };
  switch (r.access) {
    case Access::open:
    case Access::any: return;
    case Access::moderator: return need(Role::moderator);
    case Access::instructor: return need(Role::instructor);
    case Access::admin: return need(Role::admin);
    case Access::self_or_instructor:
      if (who.role == Role::student && who.id == params[0]) return;
      return need(Role::instructor);
    case Access::author_or_moderator: {
      auto it = state.submissions.find(params[0]);
      if (it == state.submissions.end()) {
        if (workflow::at_least(who.role, Role::moderator)) throw Error(Errc::unknown_submission, "no submission " + params[0]);
        need(Role::moderator);
      }
      if (it->second.author == who.id) return;
      return need(Role::moderator);
    }
    case Access::author: {
      auto it = state.submissions.find(params[0]);
      if (it == state.submissions.end()) throw Error(Errc::unknown_submission, "no submission " + params[0]);
      if (it->second.author != who.id)
        throw Error(Errc::forbidden_role, "only the author may resubmit " + params[0]);
      return;
    }
  }
}

}  // namespace

Api::Api(Store& store, Authenticator auth, Clock clock)
    : store_(store), auth_(std::move(auth)), clock_(std::move(clock)) {
  if (!clock_)
    clock_ = [] {
      return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
          .count();
    };
}

const std::vector<RouteInfo>& Api::routes() {
  static const std::vector<RouteInfo> info = [] {
    std::vector<RouteInfo> v;
    for (const auto& r : kRoutes) v.push_back({r.method, r.pattern, r.access});
    return v;
  }();
  return info;
}

Response Api::handle(const Request& req) const {
  try {
    std::string_view target = req.target;
    auto qmark = target.find('?');
    auto path = target.substr(0, qmark);
    if (path.empty() || path.front() != '/') throw Error(Errc::not_found, "no route");
    auto segs = split_path(path);
    if (!segs.empty() && segs.back().empty() && segs.size() > 1) segs.pop_back();

    const Route* route = nullptr;
    std::vector<std::string> params;
    for (const auto& r : kRoutes)
      if (req.method == r.method && match(r, segs, params)) {
        route = &r;
        break;
      }
    if (!route) throw Error(Errc::not_found, "no route for " + req.method + " " + std::string(path));

    std::optional<Principal> who;
    if (route->access != Access::open) {
      auto token = Authenticator::bearer(req.authorization);
      if (token) who = auth_.authenticate(*token);
      if (!who) throw Error(Errc::unauthenticated, "missing or unknown bearer token");
    }
    auto snap = store_.snapshot();
    if (who) check_access(*route, *who, params, *snap);
    Call call{*this, who ? &*who : nullptr, std::move(params),
              parse_query(qmark == std::string_view::npos ? std::string_view{} : target.substr(qmark + 1)),
              req.body, std::move(snap)};
    return route->handler(call);
  } catch (const SimulatedCrash&) {
    throw;
  } catch (const Error& e) {
    return error_response(e.code(), e.what());
  } catch (const Json::exception& e) {
    return error_response(Errc::invalid_parameter, e.what());
  } catch (const std::exception& e) {
    return error_response(Errc::io_error, e.what());
  }
}

}  // namespace acgt::service
