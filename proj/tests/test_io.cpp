#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <doctest.h>

#include "mt/error.hpp"
#include "mt/io.hpp"
#include "mt/normalize.hpp"

using namespace mt;
using namespace mt::testing;

namespace {

error_kind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return error_kind::domain;
}

}  // namespace

TEST_CASE("curve round trip") {
  CurveGerm c = C({{3, Rational(-2, 6)}, {5, 7}}, {{4, 1}}, {}, 12);
  io::Json j = io::curve_json(c);
  CHECK(j["x"]["3"] == "-1/3");
  CHECK(j["trunc"] == 12);
  CHECK(io::curve_from(io::parse_text(io::dump(j))) == c);
}

TEST_CASE("point round trip") {
  std::mt19937_64 rng(2);
  for (int k = 0; k <= 4; ++k) {
    TowerPoint p = random_point(rng, k);
    CHECK(io::point_from(io::parse_text(io::dump(io::point_json(p)))) == p);
  }
}

TEST_CASE("jet round trip") {
  std::mt19937_64 rng(3);
  PolyJet3 j = sample_jet(rng).jet();
  io::Json doc = io::jet_json(j);
  CHECK(io::jet_from(doc) == j);
  CHECK(doc["phi1"].begin().key().find(',') != std::string::npos);
}

TEST_CASE("trace round trip") {
  CurveGerm c = C({{3, 2}, {4, 1}}, {{5, 1}}, {{7, 1}, {8, 3}}, 20);
  Reduction r = reduce_pipeline(c);
  ReductionTrace back = io::trace_from(io::parse_text(io::dump(io::trace_json(r.trace))));
  REQUIRE(back.steps.size() == r.trace.steps.size());
  CHECK(replay(back, c) == r.curve);
}

TEST_CASE("malformed input") {
  CHECK(kind_of([] { io::parse_text("{"); }) == error_kind::parse);
  CHECK(kind_of([] { io::curve_from(io::parse_text(R"({"trunc": 4, "x": {"1": "1.0"}, "y": {}, "z": {}})")); }) ==
        error_kind::parse);
  CHECK(kind_of([] { io::curve_from(io::parse_text(R"({"trunc": 4, "x": {"1": 1}, "y": {}, "z": {}})")); }) ==
        error_kind::parse);
  CHECK(kind_of([] { io::curve_from(io::parse_text(R"({"trunc": 4, "x": {"9": "1"}, "y": {}, "z": {}})")); }) ==
        error_kind::parse);
  CHECK(kind_of([] { io::curve_from(io::parse_text(R"({"trunc": 4, "x": {"01": "1"}, "y": {}, "z": {}})")); }) ==
        error_kind::parse);
  CHECK(kind_of([] { io::curve_from(io::parse_text(R"({"trunc": 4, "x": {"1": "1"}, "y": {}})")); }) ==
        error_kind::parse);
  CHECK(kind_of([] { io::curve_from(io::parse_text(R"({"trunc": 4, "x": {"0": "1"}, "y": {}, "z": {}})")); }) ==
        error_kind::domain);
  CHECK(kind_of([] { io::point_from(io::parse_text(R"({"level": 1, "chart": [3], "coords": ["0","0","0","0","0"]})")); }) ==
        error_kind::parse);
  CHECK(kind_of([] { io::jet_from(io::parse_text(R"({"degree": 1, "phi1": {"2,0,0": "1"}, "phi2": {}, "phi3": {}})")); }) ==
        error_kind::parse);
  CHECK(kind_of([] { io::jet_from(io::parse_text(R"({"degree": 2, "phi1": {"2,0": "1"}, "phi2": {}, "phi3": {}})")); }) ==
        error_kind::parse);
}

TEST_CASE("rationals are written in lowest terms") {
  io::Json j = io::series_json(S({{1, Rational(4, -8)}, {2, Rational(6, 3)}}, 4));
  CHECK(j["1"] == "-1/2");
  CHECK(j["2"] == "2");
}
