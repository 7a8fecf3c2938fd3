#include "bicolor/records.hpp"
#include "bicolor/slices.hpp"
#include "doctest.h"

using namespace bicolor;

namespace {

Document sample() {
  Document doc;
  doc.command = "ladder";
  doc.family = "general";
  doc.g = {Rat(1, 2), Rat(1)};
  doc.order = 4;
  doc.i_max = 2;
  doc.seed = 42;
  const WeightLadder l = ladder_solve(FaceWeights(doc.g), 4);
  doc.records.push_back(make_record("B_1", l.B(1)));
  doc.records.push_back(make_record("W_1", l.W(1)));
  MSeries tri(3, 2);
  tri.set_coeff({0, 1, 1}, Rat(-7, 3));
  doc.records.push_back(make_record("odd, \"name\"", tri));
  doc.checks.push_back({"qseries", "inverse", true, "3 comparisons"});
  return doc;
}

}  // namespace

TEST_CASE("records keep the reliable terms in canonical order") {
  MSeries f(2, 5);
  f.set_coeff({0, 1, 0}, Rat(2));
  f.set_coeff({1, 0, 0}, Rat(1));
  f.set_coeff({3, 2, 0}, Rat(9));
  f.set_reliable(3);
  const SeriesRecord r = make_record("f", f);
  CHECK(r.reliable == 3);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].exponents == Exponents{0, 1, 0});
  CHECK(r.terms[1].exponents == Exponents{1, 0, 0});
  const MSeries back = record_series(r);
  CHECK(back.order() == 3);
  CHECK(compare_upto(back, f, 3).equal);
}

TEST_CASE("JSON round trip preserves every record") {
  const Document doc = sample();
  const std::string text = to_json(doc);
  const Document back = parse_json(text);
  CHECK(back.command == doc.command);
  CHECK(back.family == doc.family);
  CHECK(back.g == doc.g);
  CHECK(back.order == doc.order);
  CHECK(back.i_max == doc.i_max);
  CHECK(back.seed == doc.seed);
  REQUIRE(back.records.size() == doc.records.size());
  for (std::size_t k = 0; k < doc.records.size(); ++k) CHECK(back.records[k] == doc.records[k]);
  REQUIRE(back.checks.size() == 1);
  CHECK(back.checks[0].pass);
  CHECK(to_json(back) == text);
}

TEST_CASE("JSON layout") {
  const std::string text = to_json(sample());
  CHECK(text.find("\"numerator\": \"-7\"") != std::string::npos);
  CHECK(text.find("\"denominator\": \"3\"") != std::string::npos);
  CHECK(text.find("\"g\": [\n    \"1/2\",\n    \"1\"\n  ]") != std::string::npos);
  CHECK(text.find("\"exponents\": [\n            0,\n            1,\n            1\n          ]") != std::string::npos);
}

TEST_CASE("CSV layout") {
  const std::string csv = to_csv(sample());
  CHECK(csv.rfind("name,e0,e1,e2,numerator,denominator\n", 0) == 0);
  // A degree-two face weight of 1/2 doubles the leading term.
  CHECK(csv.find("B_1,1,0,0,2,1\n") != std::string::npos);
  CHECK(csv.find("\"odd, \"\"name\"\"\",0,1,1,-7,3\n") != std::string::npos);
  CHECK(csv.find("\n\nsuite,check,status,detail\nqseries,inverse,pass,3 comparisons\n") != std::string::npos);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json("{\"command\": \"x\"}"), std::invalid_argument);
  const std::string head = R"({"command":"c","family":"f","order":1,"i_max":1,"seed":0,"records":[)";
  CHECK_NOTHROW(parse_json(head + "]}"));
  CHECK_THROWS_AS(
      parse_json(head + R"({"name":"a","reliable":1,"terms":[{"exponents":[1],"numerator":"1","denominator":"1"}]}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_json(head +
                 R"({"name":"a","reliable":1,"terms":[{"exponents":[1,0],"numerator":"1","denominator":"0"}]}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_json(head +
                 R"({"name":"a","variables":5,"reliable":1,"terms":[]}]})"),
      std::invalid_argument);
  const Document d = parse_json(
      head + R"({"name":"a","reliable":1,"terms":[{"exponents":[1,0],"numerator":"4","denominator":"-6"}]}]})");
  CHECK(d.records[0].terms[0].coeff == Rat(-2, 3));
}
