#include "acgt/service/codec.hpp"

#include "acgt/content/corpus.hpp"
#include "acgt/content/fielded.hpp"

namespace acgt::service {

namespace {

using content::PageId;

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json optional_page(const std::optional<PageId>& id) { return id ? Json(id->str()) : Json(nullptr); }

std::optional<PageId> page_or_null(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return PageId::parse(j.get<std::string>());
}

[[noreturn]] void bad_document(const std::string& path, const std::string& why) {
  throw Error(Errc::io_error, "corrupt document " + path + ": " + why);
}

}  // namespace

Json to_json(const content::LogicalPage& p) {
  Json j;
  j["id"] = p.id.str();
  j["title"] = p.title;
  j["kind"] = std::string(to_string(p.kind));
  j["status"] = std::string(to_string(p.status));
  j["color"] = p.color ? Json(std::string(to_string(*p.color))) : Json(nullptr);
  j["definition"] = p.definition;
  j["figures"] = p.figures;
  j["constructions"] = Json::array();
  for (const auto& c : p.constructions)
    j["constructions"].push_back(
        {{"text", c.text}, {"binding", c.binding ? Json(acgt::to_string(*c.binding)) : Json(nullptr)}});
  j["properties"] = Json::array();
  for (const auto& prop : p.properties) {
    auto color = prop.color ? prop.color : p.color;
    j["properties"].push_back(
        {{"text", prop.text}, {"color", color ? Json(std::string(to_string(*color))) : Json(nullptr)}});
  }
  j["related"] = Json::array();
  for (const auto& r : p.related) j["related"].push_back(r.str());
  j["more_to_explore"] = Json::array();
  for (const auto& m : p.more_to_explore) j["more_to_explore"].push_back({{"text", m.text}, {"url", m.url}});
  j["historical_notes"] = p.historical_notes;
  j["remarks"] = Json::array();
  for (const auto& r : p.remarks) j["remarks"].push_back({{"author", r.author}, {"text", r.text}});
  j["prereq_boxes"] = Json::array();
  for (const auto& b : p.prereq_boxes)
    j["prereq_boxes"].push_back({{"type", std::string(to_string(b.declared_type))}, {"terms", b.terms}});
  j["prerequisite_courses"] = p.prerequisite_courses;
  j["computed"] = p.computed;
  return j;
}

Json page_summary(const content::LogicalPage& p) {
  return {{"id", p.id.str()},
          {"title", p.title},
          {"kind", std::string(to_string(p.kind))},
          {"status", std::string(to_string(p.status))},
          {"color", p.color ? Json(std::string(to_string(*p.color))) : Json(nullptr)}};
}

Json to_json(const workflow::Submission& s) {
  Json j;
  j["id"] = s.id;
  j["author"] = s.author;
  j["target"] = {{"page", optional_page(s.target.page)}, {"attribute", s.target.attribute}};
  j["payload"] = s.payload;
  j["state"] = std::string(to_string(s.state));
  j["published_page"] = optional_page(s.published_page);
  j["history"] = Json::array();
  for (const auto& e : s.history)
    j["history"].push_back({{"actor", e.actor},
                            {"action", std::string(to_string(e.action))},
                            {"timestamp", e.timestamp},
                            {"note", e.note},
                            {"payload", optional_json(e.payload)}});
  return j;
}

workflow::Submission submission_from_json(const Json& j) {
  workflow::Submission s;
  s.id = j.at("id").get<std::string>();
  s.author = j.at("author").get<std::string>();
  s.target.page = page_or_null(j.at("target").at("page"));
  s.target.attribute = j.at("target").at("attribute").get<std::string>();
  s.payload = j.at("payload").get<std::string>();
  auto state = workflow::parse_state(j.at("state").get<std::string>());
  if (!state) throw Error(Errc::parse_error, "unknown submission state");
  s.state = *state;
  s.published_page = page_or_null(j.at("published_page"));
  for (const auto& e : j.at("history")) {
    auto action = workflow::parse_action(e.at("action").get<std::string>());
    if (!action) throw Error(Errc::parse_error, "unknown history action");
    workflow::HistoryEntry h{e.at("actor").get<std::string>(), *action,
                             e.at("timestamp").get<std::int64_t>(), e.at("note").get<std::string>(),
                             std::nullopt};
    if (!e.at("payload").is_null()) h.payload = e.at("payload").get<std::string>();
    s.history.push_back(std::move(h));
  }
  return s;
}

Json to_json(const workflow::StudentRecord& s) {
  Json grades = Json::object();
  for (const auto& [subject, g] : s.grades) grades[subject] = workflow::to_string(g);
  Json log = Json::array();
  for (const auto& e : s.contribution_log)
    log.push_back({{"submission_id", e.submission_id},
                   {"outcome", std::string(to_string(e.outcome))},
                   {"credited_page", optional_page(e.credited_page)},
                   {"timestamp", e.timestamp}});
  return {{"id", s.id},
          {"name", s.name},
          {"grades", grades},
          {"T", s.T ? Json(workflow::to_string(*s.T)) : Json(nullptr)},
          {"group", optional_json(s.group)},
          {"contribution_log", log}};
}

workflow::StudentRecord student_from_json(const Json& j) {
  workflow::StudentRecord s;
  s.id = j.at("id").get<std::string>();
  s.name = j.at("name").get<std::string>();
  for (const auto& [subject, g] : j.at("grades").items())
    s.grades[subject] = workflow::grade_or_throw(g.get<std::string>());
  if (!j.at("T").is_null()) s.T = workflow::grade_or_throw(j.at("T").get<std::string>());
  if (!j.at("group").is_null()) s.group = j.at("group").get<int>();
  for (const auto& e : j.at("contribution_log")) {
    auto outcome = workflow::parse_outcome(e.at("outcome").get<std::string>());
    if (!outcome) throw Error(Errc::parse_error, "unknown outcome");
    s.contribution_log.push_back({e.at("submission_id").get<std::string>(), *outcome,
                                  page_or_null(e.at("credited_page")),
                                  e.at("timestamp").get<std::int64_t>()});
  }
  return s;
}

Json to_json(const workflow::GroupNotice& n) {
  return {{"student_id", n.student_id},
          {"from", optional_json(n.from)},
          {"to", optional_json(n.to)},
          {"timestamp", n.timestamp},
          {"confirmed", n.confirmed}};
}

workflow::GroupNotice notice_from_json(const Json& j) {
  workflow::GroupNotice n;
  n.student_id = j.at("student_id").get<std::string>();
  if (!j.at("from").is_null()) n.from = j.at("from").get<int>();
  if (!j.at("to").is_null()) n.to = j.at("to").get<int>();
  n.timestamp = j.at("timestamp").get<std::int64_t>();
  n.confirmed = j.at("confirmed").get<bool>();
  return n;
}

Json to_json(const content::CourseInfo& c) {
  Json cal = Json::array();
  for (const auto& e : c.calendar) cal.push_back({{"week", e.week}, {"task", e.task}});
  return {{"id", c.id}, {"title", c.title}, {"calendar", cal}};
}

content::CourseInfo course_from_json(const Json& j) {
  content::CourseInfo c{j.at("id").get<std::string>(), j.at("title").get<std::string>(), {}};
  for (const auto& e : j.at("calendar"))
    c.calendar.push_back({e.at("week").get<int>(), e.at("task").get<std::string>()});
  return c;
}

Json to_json(const workflow::ExercisePlan& p) {
  Json counts = Json::object();
  for (std::size_t t = 0; t < workflow::kProblemTypes; ++t)
    counts[std::string(1, static_cast<char>('a' + t))] = p.counts[t];
  return {{"total", p.total}, {"counts", counts}};
}

Json to_json(const workflow::ContributionReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"submission_id", e.submission_id},
                       {"outcome", std::string(to_string(e.outcome))},
                       {"credited_page", optional_page(e.credited_page)},
                       {"timestamp", e.timestamp}});
  return {{"student_id", r.student_id},
          {"published", r.published},
          {"rejected", r.rejected},
          {"entries", entries}};
}

Json to_json(const SequenceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"reference", row.reference.str()},
                    {"deutsch", row.deutsch.str()},
                    {"mathar", row.mathar.str()},
                    {"brute_force", row.brute ? Json(row.brute->str()) : Json(nullptr)},
                    {"brute_force_note", row.brute_note},
                    {"pass", row.pass}});
  return {{"rows", rows}, {"passes", r.passes()}, {"all_pass", r.all_pass()}};
}

Documents encode_state(const workflow::PortalState& s) {
  Documents docs;
  for (const auto& [id, page] : s.pages) docs["pages/" + id.str() + ".page"] = content::export_page(page);
  for (const auto& [id, sub] : s.submissions) docs["submissions/" + id + ".json"] = to_json(sub).dump(1) + "\n";
  for (const auto& [id, st] : s.students) docs["students/" + id + ".json"] = to_json(st).dump(1) + "\n";
  docs["corpus.tsv"] = content::write_corpus(s.corpus);
  docs["syllabus.tsv"] = content::write_syllabus(s.syllabus);
  docs["course.json"] = to_json(s.course).dump(1) + "\n";
  Json notices = Json::array();
  for (const auto& n : s.notices) notices.push_back(to_json(n));
  docs["notices.json"] = notices.dump(1) + "\n";
  docs["meta.json"] = Json{{"next_submission", s.next_submission},
                           {"relevant_subjects", s.relevant_subjects}}
                          .dump(1) +
                      "\n";
  return docs;
}

namespace {

bool has_prefix_suffix(const std::string& path, std::string_view prefix, std::string_view suffix) {
  return path.size() > prefix.size() + suffix.size() && path.compare(0, prefix.size(), prefix) == 0 &&
         path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string stem(const std::string& path, std::string_view prefix, std::string_view suffix) {
  return path.substr(prefix.size(), path.size() - prefix.size() - suffix.size());
}

}  // namespace

workflow::PortalState decode_state(const Documents& docs) {
  workflow::PortalState s;
  for (const auto& [path, text] : docs) {
    try {
      if (has_prefix_suffix(path, "pages/", ".page")) {
        auto page = content::import_page(text);
        if (page.id.str() != stem(path, "pages/", ".page")) bad_document(path, "id does not match file name");
        s.pages.emplace(page.id, std::move(page));
      } else if (has_prefix_suffix(path, "submissions/", ".json")) {
        auto sub = submission_from_json(Json::parse(text));
        s.submissions.emplace(sub.id, std::move(sub));
      } else if (has_prefix_suffix(path, "students/", ".json")) {
        auto st = student_from_json(Json::parse(text));
        s.students.emplace(st.id, std::move(st));
      } else if (path == "corpus.tsv") {
        s.corpus = content::parse_corpus(text);
      } else if (path == "syllabus.tsv") {
        s.syllabus = content::parse_syllabus(text);
      } else if (path == "course.json") {
        s.course = course_from_json(Json::parse(text));
      } else if (path == "notices.json") {
        for (const auto& n : Json::parse(text)) s.notices.push_back(notice_from_json(n));
      } else if (path == "meta.json") {
        auto j = Json::parse(text);
        s.next_submission = j.at("next_submission").get<std::uint64_t>();
        s.relevant_subjects = j.at("relevant_subjects").get<std::set<std::string>>();
      }
    } catch (const Json::exception& e) {
      bad_document(path, e.what());
    } catch (const Error& e) {
      if (e.code() == Errc::io_error) throw;
      bad_document(path, e.what());
    }
  }
  return s;
}

}  // namespace acgt::service
