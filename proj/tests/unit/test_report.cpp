#include "curvelink/pipeline.hpp"
#include "curvelink/report.hpp"
#include "test_data.hpp"

#include <doctest.h>

#include <json.hpp>
#include <sstream>

using namespace curvelink;

TEST_CASE("invariant report round trip") {
  for (const auto& del : std::vector<std::vector<std::string>>{{}, {"L5", "L6"}, {"L1", "L3"}}) {
    const auto r = pipeline::run_pipeline(testdata::c7(), "gamma", del).report;
    const auto text = report::to_json_lines(r);
    CHECK(report::invariant_from_json_lines(text) == r);
    CHECK(report::to_text(report::invariant_from_json_lines(text)) == report::to_text(r));
  }
}

TEST_CASE("compare report round trip") {
  const auto& c7 = testdata::c7();
  const auto c = pipeline::compare(c7, {"L5", "L6"}, c7, {"L1", "L3"}, "gamma", "gamma").report;
  const auto text = report::to_json_lines(c);
  CHECK(report::compare_from_json_lines(text) == c);
  CHECK(report::to_text(report::compare_from_json_lines(text), true) == report::to_text(c, true));
}

TEST_CASE("every json line is an object with a record type") {
  const auto r = pipeline::run_pipeline(testdata::tangent_cubic(), "gamma").report;
  std::istringstream in(report::to_json_lines(r));
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.is_object());
    CHECK(j.contains("record"));
    ++lines;
  }
  CHECK(lines > 3);
}

TEST_CASE("text report mentions the verdict") {
  const auto& c7 = testdata::c7();
  const auto c = pipeline::compare(c7, {"L5", "L6"}, c7, {"L2", "L4"}, "gamma", "gamma").report;
  CHECK(report::to_text(c).find("DISTINGUISHED") != std::string::npos);
}

TEST_CASE("malformed json lines are rejected") {
  CHECK_THROWS_AS(report::invariant_from_json_lines("{not json}\n"), InvalidArgument);
  CHECK_THROWS_AS(report::invariant_from_json_lines(""), InvalidArgument);
}
