#include <gtest/gtest.h>

#include <httplib.h>

#include <atomic>
#include <fstream>
#include <future>
#include <random>
#include <thread>

#include "acgt/service/api.hpp"
#include "acgt/service/http_server.hpp"
#include "acgt/service/store.hpp"

using namespace acgt;
using namespace acgt::service;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("acgt-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

workflow::PortalState roster_state() {
  auto s = workflow::seeded_state();
  workflow::import_roster(s, workflow::parse_roster("s1\tAsha\tCGT=B\ns2\tBen\tCGT=E\n"), 0);
  return s;
}

std::string bearer(const std::string& who) { return who.empty() ? "" : "Bearer dev-" + who; }

struct Fixture {
  TempDir dir;
  Store store{dir.path()};
  Api api{store, Authenticator::dev({"CGT-1"}), [] { return std::int64_t{1000}; }};

  Fixture() { store.reset(roster_state()); }

  Response call(const std::string& method, const std::string& target, const std::string& who,
                const std::string& body = "") const {
    return api.handle({method, target, body, bearer(who)});
  }
  Json json(const std::string& method, const std::string& target, const std::string& who,
            const std::string& body = "") const {
    return Json::parse(call(method, target, who, body).body);
  }
  std::string submit(const std::string& who, const std::string& payload,
                     const std::string& target = "ACGT-000001") const {
    auto r = call("POST", "/submissions", who, Json{{"target", target}, {"payload", payload}}.dump());
    EXPECT_EQ(r.status, 201) << r.body;
    return Json::parse(r.body).at("id").get<std::string>();
  }
  Response review(const std::string& id, const std::string& action, const std::string& who = "moderator-m1") const {
    return call("POST", "/submissions/" + id + "/review", who, Json{{"action", action}}.dump());
  }
};

const std::string kFragment = "%PROP(in-course) The hub of W_n has degree n-1.\n";

// Who may call what. Written out by hand so the router is checked against
// the documented table rather than against itself.
enum class Rule { open, any, moderator, instructor, admin, self_or_instructor, author_or_moderator, author };

const std::map<std::string, Rule> kDocumented = {
    {"GET /health", Rule::open},
    {"GET /pages", Rule::any},
    {"GET /pages/{id}", Rule::any},
    {"GET /pages/{id}/relevance", Rule::any},
    {"GET /search", Rule::any},
    {"GET /terms/{term}/backlinks", Rule::any},
    {"GET /course", Rule::any},
    {"POST /submissions", Rule::any},
    {"GET /submissions", Rule::moderator},
    {"GET /submissions/{id}", Rule::author_or_moderator},
    {"POST /submissions/{id}/review", Rule::moderator},
    {"POST /submissions/{id}/resubmit", Rule::author},
    {"POST /submissions/{id}/publish", Rule::moderator},
    {"GET /students/{id}/log", Rule::self_or_instructor},
    {"POST /roster", Rule::admin},
    {"GET /notices", Rule::instructor},
    {"POST /notices/{n}/confirm", Rule::instructor},
    {"POST /plan/exercises", Rule::instructor},
    {"GET /compute/generate", Rule::any},
    {"GET /compute/wiener", Rule::any},
    {"GET /compute/verify-a136328", Rule::any},
};

struct Caller {
  std::string token;  // "" = anonymous
  int rank;           // -1 anonymous, 0 student .. 3 admin
  bool is_s1;         // author of the probe submission, owner of /students/s1
};

const std::vector<Caller> kCallers = {
    {"", -1, false},
    {"student-s1", 0, true},
    {"student-s2", 0, false},
    {"moderator-m1", 1, false},
    {"instructor-i1", 2, false},
    {"admin-a1", 3, false},
};

bool allowed(Rule rule, const Caller& c) {
  switch (rule) {
    case Rule::open: return true;
    case Rule::any: return c.rank >= 0;
    case Rule::moderator: return c.rank >= 1;
    case Rule::instructor: return c.rank >= 2;
    case Rule::admin: return c.rank >= 3;
    case Rule::self_or_instructor: return c.is_s1 || c.rank >= 2;
    case Rule::author_or_moderator: return c.is_s1 || c.rank >= 1;
    case Rule::author: return c.is_s1;
  }
  return false;
}

std::string concrete(std::string pattern, const std::string& submission) {
  auto fill = [&](const std::string& key, const std::string& value) {
    if (auto pos = pattern.find(key); pos != std::string::npos) pattern.replace(pos, key.size(), value);
  };
  fill("{id}", pattern.rfind("/pages", 0) == 0 ? "ACGT-000001"
               : pattern.rfind("/students", 0) == 0 ? "s1"
                                                   : submission);
  fill("{term}", "graphs");
  fill("{n}", "0");
  if (pattern == "/search") pattern += "?q=wiener";
  if (pattern.rfind("/compute/", 0) == 0 && pattern != "/compute/verify-a136328") pattern += "?family=wheel&params=5";
  if (pattern == "/compute/verify-a136328") pattern += "?max_n=3";
  return pattern;
}

// Bodies that get past routing but change nothing.
std::string harmless_body(const std::string& pattern) {
  if (pattern == "/submissions/{id}/review") return R"({"action": "no-such-action"})";
  if (pattern == "/submissions/{id}/resubmit") return R"({"payload": 7})";
  if (pattern == "/plan/exercises") return R"({"pcts": "1,2,3", "total": 10})";
  if (pattern == "/submissions") return R"({"payload": 5})";
  if (pattern == "/roster") return "s1\tAsha\tCGT=Z\n";
  return "";
}

}  // namespace

TEST(Authorization, RouteTableMatchesDocumentedMatrix) {
  std::set<std::string> seen;
  for (const auto& r : Api::routes()) {
    auto key = r.method + " " + r.pattern;
    ASSERT_TRUE(kDocumented.count(key)) << "undocumented route " << key;
    seen.insert(key);
  }
  EXPECT_EQ(seen.size(), kDocumented.size());
}

TEST(Authorization, EveryRouteWithEveryRole) {
  Fixture f;
  auto sub = f.submit("student-s1", kFragment);
  auto before = f.store.snapshot();
  for (const auto& r : Api::routes()) {
    auto rule = kDocumented.at(r.method + " " + r.pattern);
    for (const auto& c : kCallers) {
      auto target = concrete(r.pattern, sub);
      auto res = f.call(r.method, target, c.token, harmless_body(r.pattern));
      auto ctx = r.method + " " + target + " as '" + c.token + "': " + res.body;
      if (c.rank < 0 && rule != Rule::open) {
        EXPECT_EQ(res.status, 401) << ctx;
      } else if (allowed(rule, c)) {
        EXPECT_NE(res.status, 401) << ctx;
        EXPECT_NE(res.status, 403) << ctx;
        EXPECT_NE(res.status, 500) << ctx;
      } else {
        EXPECT_EQ(res.status, 403) << ctx;
        EXPECT_EQ(Json::parse(res.body).at("error"), "forbidden-role") << ctx;
      }
    }
  }
  EXPECT_EQ(*f.store.snapshot(), *before);
}

TEST(Authorization, RejectsMalformedTokens) {
  Fixture f;
  for (std::string header : {"", "Bearer", "Bearer ", "Basic dev-admin-a1", "Bearer dev-root-a1",
                             "Bearer dev-admin-", "Bearer dev-admin-a/b", "Bearer x"}) {
    auto r = f.api.handle({"GET", "/pages", "", header});
    EXPECT_EQ(r.status, 401) << header;
    EXPECT_EQ(Json::parse(r.body).at("error"), "unauthenticated");
  }
}

TEST(Authorization, StaticTokens) {
  auto auth = Authenticator::static_tokens(
      "# token\tid\trole\tcourses\n0123456789abcdef\ts1\tstudent\tCGT-1\nfedcba9876543210\tm1\tmoderator\n");
  auto p = auth.authenticate("0123456789abcdef");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->id, "s1");
  EXPECT_EQ(p->role, workflow::Role::student);
  EXPECT_TRUE(p->courses.count("CGT-1"));
  EXPECT_FALSE(auth.authenticate("dev-admin-a1"));
  EXPECT_FALSE(auth.authenticate("0123456789abcde"));
  EXPECT_THROW(Authenticator::static_tokens("short\ts1\tstudent\n"), ParseError);
  EXPECT_THROW(Authenticator::static_tokens("0123456789abcdef\ts1\troot\n"), ParseError);
}

TEST(Api, UnknownRouteAndMethod) {
  Fixture f;
  EXPECT_EQ(f.call("GET", "/nope", "admin-a1").status, 404);
  EXPECT_EQ(f.call("DELETE", "/pages", "admin-a1").status, 404);
  EXPECT_EQ(f.json("GET", "/nope", "").at("error"), "not-found");
  EXPECT_EQ(f.call("GET", "/health", "").status, 200);
}

TEST(Api, StudentsDoNotSeeDrafts) {
  Fixture f;
  auto harary = content::seed_ids::harary.str();
  EXPECT_EQ(f.call("GET", "/pages/" + harary, "student-s1").status, 404);
  EXPECT_EQ(f.call("GET", "/pages/" + harary, "moderator-m1").status, 200);
  auto listed = [&](const std::string& who) {
    std::set<std::string> ids;
    auto body = f.json("GET", "/pages", who);
    for (const auto& p : body.at("pages")) ids.insert(p.at("id").get<std::string>());
    return ids;
  };
  EXPECT_FALSE(listed("student-s1").count(harary));
  EXPECT_TRUE(listed("moderator-m1").count(harary));
  EXPECT_EQ(f.call("GET", "/pages/not-an-id", "student-s1").status, 404);
}

TEST(Api, FieldedExportMatchesStore) {
  Fixture f;
  auto r = f.call("GET", "/pages/ACGT-000001?format=fielded", "student-s1");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type.rfind("text/plain", 0), 0u);
  EXPECT_EQ(content::import_page(r.body), f.store.snapshot()->pages.at(content::seed_ids::wheel));
}

TEST(Api, SearchBacklinksRelevance) {
  Fixture f;
  auto hits = f.json("GET", "/search?q=Wiener", "student-s1").at("results");
  ASSERT_FALSE(hits.empty());
  EXPECT_EQ(hits[0].at("id"), content::seed_ids::odd.str());
  auto links = f.json("GET", "/terms/recurrence%20relations/backlinks", "student-s1").at("pages");
  EXPECT_EQ(links, Json::array({content::seed_ids::block.str(), content::seed_ids::gk.str()}));
  EXPECT_EQ(f.call("GET", "/terms/no%20such%20term/backlinks", "student-s1").status, 404);
  EXPECT_EQ(f.json("GET", "/pages/ACGT-000001/relevance", "student-s1").at("relevance"), "1/4");
}

TEST(Api, ReviewBeforeStartIsConflictAndStudentIsForbidden) {
  Fixture f;
  auto id = f.submit("student-s1", kFragment);
  auto r = f.review(id, "approve", "student-s1");
  EXPECT_EQ(r.status, 403);
  r = f.review(id, "approve");
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(Json::parse(r.body).at("error"), "illegal-transition");
}

TEST(Api, PublishFlowPersistsAcrossReopen) {
  Fixture f;
  auto id = f.submit("student-s1", kFragment);
  EXPECT_EQ(f.review(id, "start").status, 200);
  EXPECT_EQ(f.review(id, "approve").status, 200);
  auto r = f.call("POST", "/submissions/" + id + "/publish", "moderator-m1");
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(Json::parse(r.body).at("submission").at("state"), "Published");

  auto log = f.json("GET", "/students/s1/log", "student-s1");
  EXPECT_EQ(log.at("published"), 1);
  EXPECT_EQ(f.call("GET", "/students/s1/log", "student-s2").status, 403);

  Store reopened(f.dir.path());
  EXPECT_EQ(*reopened.snapshot(), *f.store.snapshot());
  EXPECT_EQ(reopened.snapshot()->pages.at(content::seed_ids::wheel).properties.back().text,
            "The hub of W_n has degree n-1.");
}

TEST(Api, FailedPublishIsRecordedAndReported) {
  Fixture f;
  auto id = f.submit("student-s1", "%REL ACGT-000999\n");
  f.review(id, "start");
  f.review(id, "approve");
  auto r = f.call("POST", "/submissions/" + id + "/publish", "moderator-m1");
  EXPECT_EQ(r.status, 400);
  auto body = Json::parse(r.body);
  EXPECT_EQ(body.at("error"), "validation-failed");
  EXPECT_EQ(body.at("findings").at(0).at("code"), "unresolved-related");
  auto sub = f.json("GET", "/submissions/" + id, "student-s1");
  EXPECT_EQ(sub.at("state"), "Approved");
  EXPECT_EQ(sub.at("history").back().at("action"), "publish-failed");
}

TEST(Api, ResubmitOnlyByAuthor) {
  Fixture f;
  auto id = f.submit("student-s1", kFragment);
  f.review(id, "start");
  f.review(id, "request-changes");
  auto body = Json{{"payload", kFragment}}.dump();
  EXPECT_EQ(f.call("POST", "/submissions/" + id + "/resubmit", "moderator-m1", body).status, 403);
  EXPECT_EQ(f.call("POST", "/submissions/" + id + "/resubmit", "student-s2", body).status, 403);
  auto r = f.call("POST", "/submissions/" + id + "/resubmit", "student-s1", body);
  EXPECT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(Json::parse(r.body).at("state"), "Submitted");
}

TEST(Api, SubmissionQueueFilter) {
  Fixture f;
  auto a = f.submit("student-s1", kFragment);
  f.submit("student-s2", kFragment);
  f.review(a, "start");
  auto q = f.json("GET", "/submissions?state=InReview", "moderator-m1").at("submissions");
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].at("id"), a);
  EXPECT_EQ(f.json("GET", "/submissions", "moderator-m1").at("submissions").size(), 2u);
  EXPECT_EQ(f.call("GET", "/submissions?state=Lost", "moderator-m1").status, 400);
}

TEST(Api, RosterNoticesAndUtf8) {
  Fixture f;
  auto r = f.call("POST", "/roster", "admin-a1", "s1\tAsha\tCGT=E\ns3\tZo\xC3\xAB\tCGT=A\n");
  ASSERT_EQ(r.status, 200) << r.body;
  auto body = Json::parse(r.body);
  EXPECT_EQ(body.at("imported"), 2);
  ASSERT_EQ(body.at("notices").size(), 1u);
  EXPECT_EQ(body.at("notices")[0].at("from"), 1);
  EXPECT_EQ(body.at("notices")[0].at("to"), 3);
  EXPECT_EQ(f.call("POST", "/notices/0/confirm", "instructor-i1").status, 200);
  EXPECT_TRUE(f.json("GET", "/notices", "instructor-i1").at("notices")[0].at("confirmed").get<bool>());
  EXPECT_EQ(f.call("POST", "/notices/9/confirm", "instructor-i1").status, 404);

  r = f.call("POST", "/roster", "admin-a1", "s4\tBad\xC3(\tCGT=A\n");
  EXPECT_EQ(r.status, 400);
  r = f.call("POST", "/roster", "admin-a1", Json{{"roster", "s5\tEve\tCGT=C\n"}}.dump());
  EXPECT_EQ(r.status, 200) << r.body;
}

TEST(Api, PlanEndpoint) {
  Fixture f;
  auto plan = f.json("POST", "/plan/exercises", "instructor-i1", R"({"pcts": "0,0,100", "total": 10})");
  EXPECT_EQ(plan.at("counts"), (Json{{"a", 6}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}}));
  plan = f.json("POST", "/plan/exercises", "instructor-i1", R"({"pcts": [1, 0, 0], "total": 20})");
  EXPECT_EQ(plan.at("counts"), (Json{{"a", 2}, {"b", 5}, {"c", 5}, {"d", 4}, {"e", 4}}));
  auto bad = f.json("POST", "/plan/exercises", "instructor-i1", R"({"pcts": "50,30,30", "total": 10})");
  EXPECT_EQ(bad.at("error"), "invalid-percentages");
  EXPECT_EQ(f.call("POST", "/plan/exercises", "instructor-i1", "{not json").status, 400);
}

TEST(Api, ComputeEndpoints) {
  Fixture f;
  auto gen = f.json("GET", "/compute/generate?family=wheel&params=5", "student-s1");
  EXPECT_EQ(gen.at("edge_list").get<std::string>().substr(0, 4), "5 8\n");
  auto w = f.json("GET", "/compute/wiener?family=petersen", "student-s1");
  EXPECT_EQ(w.at("wiener"), "75");
  w = f.json("GET", "/compute/wiener?family=hypercube&params=5", "student-s1");
  EXPECT_EQ(w.at("wiener"), "1280");
  auto v = f.json("GET", "/compute/verify-a136328?max_n=17", "student-s1");
  EXPECT_EQ(v.at("rows").size(), 17u);
  EXPECT_TRUE(v.at("all_pass").get<bool>());
  EXPECT_EQ(f.call("GET", "/compute/wiener?family=hypercube&params=12", "student-s1").status, 400);
  EXPECT_EQ(f.call("GET", "/compute/generate?family=nope", "student-s1").status, 400);
  EXPECT_EQ(f.call("GET", "/compute/generate?family=wheel&params=%zz", "student-s1").status, 400);
}

TEST(Api, ComputeIsPure) {
  Fixture f;
  Fixture g;
  g.submit("student-s1", kFragment);  // unrelated state must not leak into compute bodies
  const std::vector<std::string> targets = {
      "/compute/generate?family=gear&params=6",
      "/compute/generate?family=gk-closed&params=2",
      "/compute/wiener?family=odd&params=4",
      "/compute/wiener?family=block&params=3",
      "/compute/verify-a136328?max_n=6",
  };
  for (const auto& t : targets) {
    auto a = f.call("GET", t, "student-s1");
    auto b = f.call("GET", t, "admin-a1");
    auto c = g.call("GET", t, "moderator-m1");
    EXPECT_EQ(a.status, 200) << t;
    EXPECT_EQ(a.body, b.body) << t;
    EXPECT_EQ(a.body, c.body) << t;
  }
}

TEST(Query, PercentDecodingAndUtf8) {
  EXPECT_EQ(percent_decode("a%20b+c", true), "a b c");
  EXPECT_EQ(percent_decode("a+b", false), "a+b");
  EXPECT_THROW(percent_decode("%2", true), Error);
  EXPECT_THROW(percent_decode("%g0", true), Error);
  auto q = parse_query("q=wheel+graph&x&y=1%262");
  EXPECT_EQ(q.at("q"), "wheel graph");
  EXPECT_EQ(q.at("x"), "");
  EXPECT_EQ(q.at("y"), "1&2");
  EXPECT_TRUE(valid_utf8("plain \xC3\xA9\xE2\x82\xAC\xF0\x9F\x98\x80"));
  EXPECT_FALSE(valid_utf8("\xC3"));
  EXPECT_FALSE(valid_utf8("\xC0\xAF"));          // overlong
  EXPECT_FALSE(valid_utf8("\xED\xA0\x80"));      // surrogate
  EXPECT_FALSE(valid_utf8("\xF4\x90\x80\x80"));  // past U+10FFFF
}

TEST(Store, CodecRoundTrip) {
  auto s = roster_state();
  EXPECT_EQ(decode_state(encode_state(s)), s);
}

TEST(Store, ReopenSeesCommittedState) {
  TempDir dir;
  {
    Store store(dir.path());
    EXPECT_TRUE(store.empty());
    store.reset(roster_state());
  }
  Store again(dir.path());
  EXPECT_EQ(*again.snapshot(), roster_state());
}

TEST(Store, FailedMutationWritesNothing) {
  TempDir dir;
  Store store(dir.path());
  store.reset(roster_state());
  auto commits = store.commits();
  EXPECT_THROW(store.mutate([](workflow::PortalState& s) {
    s.pages.clear();
    throw Error(Errc::conflict, "abort");
  }), Error);
  EXPECT_EQ(store.commits(), commits);
  EXPECT_EQ(*store.snapshot(), roster_state());
  EXPECT_EQ(*Store(dir.path()).snapshot(), roster_state());
}

TEST(Store, StrayTempFilesAreDiscarded) {
  TempDir dir;
  { Store(dir.path()).reset(roster_state()); }
  write_file_atomic(dir.path() / "pages" / "ACGT-000001.page.tmp.x", "garbage");
  std::ofstream(dir.path() / "pages" / "ACGT-000001.page.tmp") << "%ID ACGT-000001\n%TITLE torn";
  Store store(dir.path());
  EXPECT_EQ(*store.snapshot(), roster_state());
  EXPECT_FALSE(fs::exists(dir.path() / "pages" / "ACGT-000001.page.tmp"));
}

// Abort a publish at every hook point; the reopened store must hold exactly
// the state before or after the publish.
TEST(Store, CrashDuringPublishYieldsPreOrPostState) {
  auto prepare = [](const fs::path& root) {
    Store store(root);
    auto s = roster_state();
    auto id = workflow::submit(s, {"s1", workflow::Role::student}, {content::seed_ids::wheel, "properties"},
                               kFragment, 1).id;
    workflow::review(s, id, workflow::Action::start_review, {"m1", workflow::Role::moderator}, 2);
    workflow::review(s, id, workflow::Action::approve, {"m1", workflow::Role::moderator}, 3);
    store.reset(s);
    return std::pair{s, id};
  };
  auto publish = [](workflow::PortalState& s, const std::string& id) {
    auto out = workflow::publish(s, id, {"m1", workflow::Role::moderator}, 4);
    ASSERT_TRUE(out.published) << out.report.summary();
  };

  // Learn how many documents a publish touches.
  TempDir probe;
  auto [pre, id] = prepare(probe.path());
  auto post = pre;
  publish(post, id);
  std::size_t documents = 0;
  {
    Store store(probe.path());
    store.set_crash_hook([&](CommitStage stage, std::size_t done) {
      if (stage == CommitStage::document_written) documents = std::max(documents, done);
    });
    store.mutate([&](workflow::PortalState& s) { publish(s, id); });
    EXPECT_EQ(*store.snapshot(), post);
  }
  ASSERT_GE(documents, 3u);  // page, submission, student

  struct Point {
    CommitStage stage;
    std::size_t done;
    bool expect_post;
  };
  std::vector<Point> points{{CommitStage::journal_written, 0, true}};
  for (std::size_t k = 1; k <= documents; ++k) points.push_back({CommitStage::document_written, k, true});
  points.push_back({CommitStage::applied, documents, true});

  for (const auto& point : points) {
    TempDir dir;
    prepare(dir.path());
    {
      Store store(dir.path());
      store.set_crash_hook([&](CommitStage stage, std::size_t done) {
        if (stage == point.stage && done == point.done) throw SimulatedCrash();
      });
      EXPECT_THROW(store.mutate([&](workflow::PortalState& s) { publish(s, id); }), SimulatedCrash);
    }
    Store reopened(dir.path());
    auto got = *reopened.snapshot();
    EXPECT_TRUE(got == pre || got == post) << "hybrid state after crash at stage "
                                           << static_cast<int>(point.stage) << " doc " << point.done;
    EXPECT_EQ(got, point.expect_post ? post : pre);
    EXPECT_TRUE(fs::is_empty(dir.path() / "journal"));
  }

  // A crash before the record is durable leaves the pre state.
  TempDir early;
  prepare(early.path());
  write_file_atomic(early.path() / "journal" / "99.rec.tmp", "{\"partial\":");
  EXPECT_EQ(*Store(early.path()).snapshot(), pre);
}

TEST(Store, ConcurrentReadersSeeWholeSnapshots) {
  TempDir dir;
  Store store(dir.path());
  store.reset(roster_state());
  std::atomic<bool> done{false};
  std::atomic<int> bad{0};
  std::thread reader([&] {
    while (!done) {
      auto snap = store.snapshot();
      std::size_t subs = snap->submissions.size();
      if (snap->next_submission != subs + 1) ++bad;
    }
  });
  for (int i = 0; i < 20; ++i)
    store.mutate([&](workflow::PortalState& s) {
      workflow::submit(s, {"s1", workflow::Role::student}, {content::seed_ids::wheel, "properties"}, kFragment, i);
    });
  done = true;
  reader.join();
  EXPECT_EQ(bad, 0);
  EXPECT_EQ(store.snapshot()->submissions.size(), 20u);
}

TEST(Http, ServesApiOverLoopback) {
  Fixture f;
  ServerOptions opts;
  opts.host = "127.0.0.1";
  opts.port = 0;
  std::promise<int> ready;
  std::thread server([&] { run_server(f.api, opts, [&](int port) { ready.set_value(port); }); });
  int port = ready.get_future().get();

  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);

  httplib::Headers auth = {{"Authorization", "Bearer dev-student-s1"}};
  auto w = client.Get("/compute/wiener?family=petersen", auth);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->status, 200);
  EXPECT_EQ(Json::parse(w->body).at("wiener"), "75");
  EXPECT_EQ(w->body, f.call("GET", "/compute/wiener?family=petersen", "student-s1").body);

  auto denied = client.Post("/submissions/S-000001/review", auth, R"({"action":"approve"})", "application/json");
  ASSERT_TRUE(denied);
  EXPECT_EQ(denied->status, 403);

  auto search = client.Get("/search?q=odd%20graph", auth);
  ASSERT_TRUE(search);
  EXPECT_EQ(search->status, 200);

  stop_server();
  server.join();
}
