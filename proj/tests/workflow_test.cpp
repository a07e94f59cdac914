#include <gtest/gtest.h>

#include <random>

#include "acgt/workflow/grades.hpp"
#include "acgt/workflow/plan.hpp"
#include "acgt/workflow/portal.hpp"
#include "support/workflow_model.hpp"

using namespace acgt;
using namespace acgt::workflow;

namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an acgt::Error";
  return Errc::io_error;
}

const Actor kStudent{"s1", Role::student};
const Actor kOther{"s2", Role::student};
const Actor kModerator{"m1", Role::moderator};
const Actor kInstructor{"i1", Role::instructor};

PortalState with_roster() {
  auto s = seeded_state();
  import_roster(s, parse_roster("s1\tAsha\tCGT=B,Algorithms=A\ns2\tBen\tCGT=E\n"), 0);
  return s;
}

Target wheel_target() { return {content::seed_ids::wheel, "properties"}; }

const std::string kFragment = "%PROP(in-course) The hub of W_n has degree n-1.\n";

GroupShares shares(int g1, int g2, int g3) {
  return {BigRational(g1, 100), BigRational(g2, 100), BigRational(g3, 100)};
}

}  // namespace

TEST(Grouping, SixGradesMapToThreeGroups) {
  EXPECT_EQ(assign_group(Grade::A), 1);
  EXPECT_EQ(assign_group(Grade::B), 1);
  EXPECT_EQ(assign_group(Grade::C), 2);
  EXPECT_EQ(assign_group(Grade::D), 2);
  EXPECT_EQ(assign_group(Grade::E), 3);
  EXPECT_EQ(assign_group(Grade::F), 3);
  EXPECT_EQ(assign_group("D"), 2);
  EXPECT_EQ(error_code([] { assign_group("G"); }), Errc::invalid_grade);
  EXPECT_EQ(error_code([] { assign_group("a"); }), Errc::invalid_grade);
}

TEST(Grouping, DeriveTRoundsHalfUp) {
  std::set<std::string> rel{"CGT", "Discrete", "Algorithms", "X", "Y"};
  EXPECT_EQ(derive_T({{"CGT", Grade::A}}, rel), Grade::A);
  EXPECT_EQ(derive_T({{"Discrete", Grade::A}, {"Algorithms", Grade::B}}, rel), Grade::A);
  EXPECT_EQ(derive_T({{"X", Grade::C}, {"Y", Grade::E}}, rel), Grade::D);
  EXPECT_EQ(derive_T({{"X", Grade::E}, {"Y", Grade::F}}, rel), Grade::E);  // 0.5 -> 1
  EXPECT_EQ(derive_T({{"X", Grade::A}, {"Y", Grade::F}, {"Art", Grade::F}}, rel), Grade::C);
  EXPECT_EQ(error_code([&] { derive_T({{"Art", Grade::A}}, rel); }), Errc::no_relevant_grades);
}

// Oracle: mean points compared with the half-point boundaries in doubles
// is exact for these small sums.
TEST(Grouping, DeriveTMatchesFloatingOracle) {
  std::mt19937_64 rng(11);
  std::set<std::string> rel{"a", "b", "c", "d", "e"};
  for (int trial = 0; trial < 2000; ++trial) {
    std::map<std::string, Grade> grades;
    for (const auto& subj : rel)
      if (rng() % 2) grades[subj] = static_cast<Grade>(rng() % 6);
    if (grades.empty()) continue;
    double mean = 0;
    for (const auto& [k, g] : grades) mean += grade_points(g);
    mean /= static_cast<double>(grades.size());
    int points = static_cast<int>(mean + 0.5);
    EXPECT_EQ(grade_points(derive_T(grades, rel)), points);
  }
}

TEST(Plan, DecidedExamples) {
  auto p = plan_exercises(shares(0, 0, 100), 10);
  EXPECT_EQ(p.counts, (std::array<std::uint64_t, 5>{6, 1, 1, 1, 1}));
  auto q = plan_exercises(shares(100, 0, 0), 20);
  EXPECT_EQ(q.counts, (std::array<std::uint64_t, 5>{2, 5, 5, 4, 4}));
  // Small totals are not forced to cover every type.
  auto r = plan_exercises(shares(0, 0, 100), 2);
  // raw 1.2, 0.3, 0.3, 0.1, 0.1
  EXPECT_EQ(r.counts, (std::array<std::uint64_t, 5>{1, 1, 0, 0, 0}));
}

TEST(Plan, RejectsBadShares) {
  EXPECT_EQ(error_code([] { plan_exercises(shares(50, 50, 10), 10); }), Errc::invalid_percentages);
  EXPECT_EQ(error_code([] { plan_exercises(shares(-10, 60, 50), 10); }), Errc::invalid_percentages);
  EXPECT_EQ(error_code([] { plan_exercises(shares(0, 0, 100), 0); }), Errc::invalid_parameter);
  EXPECT_EQ(parse_group_shares("20,30,50"), shares(20, 30, 50));
  EXPECT_EQ(parse_group_shares("1/5,0.3,1/2"), shares(20, 30, 50));
  EXPECT_THROW(parse_group_shares("1,0"), Error);
}

// Property: totals conserved; minimum one per type when total >= 5.
TEST(Plan, ConservesAndCoversOnRandomShares) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint64_t a = rng() % 1001, b = rng() % (1001 - a);
    GroupShares s{BigRational(a, 1000), BigRational(b, 1000), BigRational(1000 - a - b, 1000)};
    std::uint64_t total = 1 + rng() % 100;
    auto plan = plan_exercises(s, total);
    std::uint64_t sum = 0;
    for (auto c : plan.counts) sum += c;
    EXPECT_EQ(sum, total);
    if (total >= 5)
      for (auto c : plan.counts) EXPECT_GE(c, 1u);
  }
}

// Property: moving share into group 3 never lowers the type-a count.
TEST(Plan, MonotoneInGroupThree) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 3000; ++trial) {
    int a = static_cast<int>(rng() % 101), b = static_cast<int>(rng() % (101 - a));
    int c = 100 - a - b;
    int from = static_cast<int>(rng() % 2);
    int d = 1 + static_cast<int>(rng() % 30);
    int src = from == 0 ? a : b;
    if (src < d) continue;
    std::uint64_t total = 1 + rng() % 60;
    auto before = plan_exercises(shares(a, b, c), total);
    auto after = from == 0 ? plan_exercises(shares(a - d, b, c + d), total)
                           : plan_exercises(shares(a, b - d, c + d), total);
    EXPECT_GE(after.counts[0], before.counts[0]) << a << "," << b << "," << c << " total " << total;
  }
}

TEST(StateMachine, RoleAndStateChecks) {
  auto s = with_roster();
  auto id = submit(s, kStudent, wheel_target(), kFragment, 100).id;
  EXPECT_EQ(error_code([&] { review(s, id, Action::approve, kModerator, 101); }), Errc::illegal_transition);
  EXPECT_EQ(error_code([&] { review(s, id, Action::start_review, kStudent, 101); }), Errc::forbidden_role);
  EXPECT_EQ(error_code([&] { publish(s, id, kStudent, 101); }), Errc::forbidden_role);
  EXPECT_EQ(error_code([&] { publish(s, id, kModerator, 101); }), Errc::illegal_transition);
  EXPECT_EQ(error_code([&] { review(s, "S-999999", Action::start_review, kModerator, 1); }),
            Errc::unknown_submission);
  EXPECT_EQ(error_code([&] { submit(s, kStudent, {content::PageId::from_number(999), ""}, kFragment, 1); }),
            Errc::unknown_page);
  EXPECT_EQ(error_code([&] { submit(s, kStudent, wheel_target(), "%ZZ x\n", 1); }), Errc::parse_error);
  EXPECT_EQ(s.submissions.size(), 1u);
}

TEST(StateMachine, ApproveThenPublishCreditsAuthor) {
  auto s = with_roster();
  auto before = s.pages.at(content::seed_ids::wheel);
  auto id = submit(s, kStudent, wheel_target(), kFragment, 100).id;
  review(s, id, Action::start_review, kModerator, 101);
  review(s, id, Action::approve, kModerator, 102, "looks right");
  auto out = publish(s, id, kModerator, 103);
  ASSERT_TRUE(out.published) << out.report.summary();
  const auto& page = s.pages.at(content::seed_ids::wheel);
  EXPECT_EQ(page.properties.size(), before.properties.size() + 1);
  EXPECT_EQ(page.properties.back().text, "The hub of W_n has degree n-1.");
  const auto& sub = s.submissions.at(id);
  EXPECT_EQ(sub.state, State::published);
  EXPECT_EQ(sub.history.size(), 4u);
  auto report = contribution_report(s, "s1");
  ASSERT_EQ(report.entries.size(), 1u);
  EXPECT_EQ(report.entries[0].outcome, Outcome::published);
  EXPECT_EQ(report.entries[0].credited_page, content::seed_ids::wheel);
  EXPECT_EQ(report.published, 1u);
  EXPECT_EQ(replay(sub), sub);
}

TEST(StateMachine, InvalidPayloadLeavesPageAndStaysApproved) {
  auto s = with_roster();
  auto before = s.pages;
  auto id = submit(s, kStudent, wheel_target(), "%REL ACGT-000999\n", 100).id;
  review(s, id, Action::start_review, kModerator, 101);
  review(s, id, Action::approve, kModerator, 102);
  auto out = publish(s, id, kModerator, 103);
  EXPECT_FALSE(out.published);
  EXPECT_TRUE(out.report.has("unresolved-related"));
  EXPECT_EQ(s.pages, before);
  const auto& sub = s.submissions.at(id);
  EXPECT_EQ(sub.state, State::approved);
  EXPECT_EQ(sub.history.back().action, Action::publish_failed);
  EXPECT_TRUE(contribution_report(s, "s1").entries.empty());
}

TEST(StateMachine, NewPageProposalGetsNextId) {
  auto s = with_roster();
  std::string page =
      "%TITLE Ladder graph L_n\n%KIND special-graph\n%COLOR in-course\n"
      "%DEF Two paths of length n joined rung by rung.\n%CONS(ladder:4) Cartesian product of P_n and K_2.\n"
      "%PREREQ(P1) graphs; isomorphism\n";
  auto id = submit(s, kStudent, {std::nullopt, ""}, page, 1).id;
  review(s, id, Action::start_review, kModerator, 2);
  review(s, id, Action::augment, kModerator, 3, "added a related link", page + "%REL ACGT-000001\n");
  review(s, id, Action::approve, kInstructor, 4);
  auto out = publish(s, id, kModerator, 5);
  ASSERT_TRUE(out.published) << out.report.summary();
  EXPECT_EQ(out.page, content::PageId::from_number(9));
  EXPECT_EQ(s.pages.at(out.page).related.size(), 1u);
  EXPECT_TRUE(s.pages.at(out.page).published());
}

TEST(StateMachine, ChangesRequestedThenResubmit) {
  auto s = with_roster();
  auto id = submit(s, kStudent, wheel_target(), kFragment, 1).id;
  review(s, id, Action::start_review, kModerator, 2);
  review(s, id, Action::request_changes, kModerator, 3, "cite a source");
  EXPECT_EQ(error_code([&] { resubmit(s, id, kOther, kFragment, 4); }), Errc::forbidden_role);
  resubmit(s, id, kStudent, kFragment + "%MORE(https://example.org) Source\n", 4);
  const auto& sub = s.submissions.at(id);
  EXPECT_EQ(sub.state, State::submitted);
  EXPECT_EQ(sub.history.size(), 4u);
  EXPECT_NE(sub.payload.find("%MORE"), std::string::npos);
  EXPECT_EQ(replay(sub), sub);
}

TEST(StateMachine, RejectionIsLoggedWithoutCredit) {
  auto s = with_roster();
  EXPECT_TRUE(contribution_report(s, "s1").entries.empty());
  EXPECT_EQ(error_code([&] { contribution_report(s, "nobody"); }), Errc::unknown_student);
  auto id = submit(s, kStudent, wheel_target(), kFragment, 1).id;
  review(s, id, Action::start_review, kModerator, 2);
  review(s, id, Action::reject, kModerator, 3);
  auto r = contribution_report(s, "s1");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].outcome, Outcome::rejected);
  EXPECT_FALSE(r.entries[0].credited_page);
  EXPECT_EQ(r.rejected, 1u);
  EXPECT_EQ(error_code([&] { review(s, id, Action::start_review, kModerator, 4); }),
            Errc::illegal_transition);
}

TEST(Roster, ParseAndGroupNotices) {
  auto s = with_roster();
  EXPECT_EQ(s.students.at("s1").T, Grade::A);
  EXPECT_EQ(s.students.at("s1").group, 1);
  EXPECT_EQ(s.students.at("s2").group, 3);
  EXPECT_TRUE(s.notices.empty());
  import_roster(s, parse_roster("s2\tBen\tCGT=C,Algorithms=C\n"), 50);
  ASSERT_EQ(s.notices.size(), 1u);
  EXPECT_EQ(s.notices[0].from, 3);
  EXPECT_EQ(s.notices[0].to, 2);
  EXPECT_FALSE(s.notices[0].confirmed);
  import_roster(s, parse_roster("s3\tCai\tArt=A\n"), 60);
  EXPECT_FALSE(s.students.at("s3").group);
  EXPECT_THROW(parse_roster("s1\tA\tCGT=Q\n"), ParseError);
  EXPECT_THROW(parse_roster("s1\tA\tCGT\n"), ParseError);
  EXPECT_THROW(parse_roster("s1\tA\n s1\tB\ns1\tC\n"), ParseError);
}

TEST(StateMachine, RandomActionSequences) {
  auto result = test_support::check_random_sequences(2024, 1000, 25);
  EXPECT_FALSE(result.violation.has_value()) << *result.violation;
  EXPECT_EQ(result.steps, 25000u);
  EXPECT_GT(result.published, 0u);
}
