#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "acgt/content/page.hpp"
#include "acgt/odd_wiener.hpp"
#include "acgt/workflow/plan.hpp"
#include "acgt/workflow/portal.hpp"

// JSON views of portal values, and the document layout of the store.
namespace acgt::service {

using Json = nlohmann::json;

Json to_json(const content::LogicalPage& page);
Json page_summary(const content::LogicalPage& page);
Json to_json(const workflow::Submission& s);
workflow::Submission submission_from_json(const Json& j);
Json to_json(const workflow::StudentRecord& s);
workflow::StudentRecord student_from_json(const Json& j);
Json to_json(const workflow::GroupNotice& n);
workflow::GroupNotice notice_from_json(const Json& j);
Json to_json(const content::CourseInfo& c);
content::CourseInfo course_from_json(const Json& j);
Json to_json(const workflow::ExercisePlan& p);
Json to_json(const workflow::ContributionReport& r);
// Omits timing so identical requests produce identical bodies.
Json to_json(const SequenceReport& r);

// Relative path -> file content. Paths:
//   pages/<page-id>.page        fielded format
//   submissions/<id>.json
//   students/<id>.json
//   corpus.tsv  syllabus.tsv  course.json  notices.json  meta.json
using Documents = std::map<std::string, std::string>;

Documents encode_state(const workflow::PortalState& state);
workflow::PortalState decode_state(const Documents& docs);

}  // namespace acgt::service
