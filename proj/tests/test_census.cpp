#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <doctest.h>

#include "mt/census.hpp"
#include "mt/error.hpp"
#include "mt/invariants.hpp"

using namespace mt;
using namespace mt::testing;

namespace {

std::vector<std::string> strs(const std::vector<RVTWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

std::vector<std::string> names(const std::vector<Letter>& ls) {
  std::vector<std::string> out;
  for (Letter l : ls) out.push_back(letter_name(l));
  return out;
}

}  // namespace

TEST_CASE("successor rule") {
  CHECK(names(class_successors(Letter::R)) == std::vector<std::string>{"R", "V"});
  CHECK(names(class_successors(Letter::V)) == std::vector<std::string>{"R", "V", "T", "L"});
  CHECK(names(class_successors(Letter::T)) == std::vector<std::string>{"R", "V", "T", "L"});
  CHECK(class_successors(Letter::L).size() == 7);
  for (Letter l : {Letter::T1, Letter::T2, Letter::L1, Letter::L2, Letter::L3})
    CHECK_THROWS_AS(class_successors(l), Error);
}

TEST_CASE("class enumeration") {
  CHECK(strs(enumerate_classes(1)) == std::vector<std::string>{"R"});
  CHECK(strs(enumerate_classes(2)) == std::vector<std::string>{"RR", "RV"});
  CHECK(strs(enumerate_classes(3)) == std::vector<std::string>{"RRR", "RRV", "RVR", "RVV", "RVT", "RVL"});
  std::vector<std::string> four;
  for (const char* w : {"RRRR", "RRRV", "RRVR", "RRVV", "RRVT", "RRVL", "RVRR", "RVRV", "RVVR", "RVVV", "RVVT", "RVVL",
                        "RVTR", "RVTV", "RVTT", "RVTL", "RVLR", "RVLV", "RVLT_1", "RVLT_2", "RVLL_1", "RVLL_2",
                        "RVLL_3"})
    four.push_back(RVTWord::parse(w).str());
  CHECK(strs(enumerate_classes(4)) == four);
  CHECK_THROWS_AS(enumerate_classes(5), Error);
  CHECK_THROWS_AS(enumerate_classes(0), Error);
}

TEST_CASE("every class has a witness point") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& code : enumerate_classes(k)) {
      TowerPoint p = class_witness(code);
      CHECK(p.code() == code);
      CHECK(rvt_code(realize_point(p), k) == code);
    }
}

TEST_CASE("representatives") {
  auto reps = [](const char* w) { return representatives(RVTWord::parse(w)); };
  REQUIRE(reps("RVL").size() == 1);
  CHECK(reps("RVL")[0] == CurveGerm::from_terms({{4, 1}}, {{6, 1}}, {{7, 1}}, 32));
  REQUIRE(reps("RRV").size() == 1);
  CHECK(reps("RRV")[0] == CurveGerm::from_terms({{2, 1}}, {{5, 1}}, {}, 32));
  CHECK(reps("RVV").size() == 2);
  CHECK(reps("RRRV")[0] == CurveGerm::from_terms({{2, 1}}, {{7, 1}}, {}, 32));
  std::string tag;
  CHECK(representatives(RVTWord::parse("RVTT"), 32, &tag).empty());
  CHECK_FALSE(tag.empty());
  for (int k = 1; k <= 4; ++k)
    for (const auto& code : enumerate_classes(k))
      for (const auto& c : representatives(code)) CHECK(rvt_code(c, k) == code);
}

TEST_CASE("published counts") {
  int totals[5] = {0, 0, 0, 0, 0};
  for (int k = 1; k <= 4; ++k)
    for (const auto& code : enumerate_classes(k)) totals[k] += published_orbit_count(code);
  CHECK(totals[1] == 1);
  CHECK(totals[2] == 2);
  CHECK(totals[3] == 7);
  CHECK(totals[4] == 34);
}

TEST_CASE("RVVV curves") {
  CurveGerm a = rvvv_curve(1), b = rvvv_curve(0);
  CHECK(rvt_code(a, 4).str() == "RVVV");
  CHECK(rvt_code(b, 4).str() == "RVVV");
  CHECK(multiplicity(a) == 5);
  CHECK(b.z().valuation() >= 12);
}

TEST_CASE("RVVV split") {
  RvvvReport r = verify_rvvv_split();
  CHECK(r.ok);
  CHECK(r.conclusion == ">= 2 orbits demonstrated; = 2 per paper");
  CHECK_FALSE(r.offending.has_value());
  CHECK(r.lines.size() == 5);
}

TEST_CASE("orbit census") {
  CHECK(orbit_census(1).total == 1);
  CHECK(orbit_census(2).total == 2);
  Census c3 = orbit_census(3);
  CHECK(c3.total == 7);
  std::vector<int> counts;
  for (const auto& r : c3.records) counts.push_back(r.orbit_count);
  CHECK(counts == std::vector<int>{1, 1, 1, 1, 2, 1});
  const ClassRecord& rvv = c3.records[3];
  CHECK(rvv.code.str() == "RVV");
  CHECK(rvv.curves.size() == 2);
  CHECK(rvv.orbit_count == 1);

  Census c4 = orbit_census(4);
  CHECK(c4.total == 34);
  int ones = 0, twos = 0, fours = 0;
  for (const auto& r : c4.records) {
    (r.orbit_count == 1 ? ones : r.orbit_count == 2 ? twos : fours)++;
    CHECK_FALSE(r.evidence.empty());
    for (const auto& e : r.evidence)
      if (e.kind != Evidence::Kind::paper_citation) CHECK_MESSAGE(e.verified, r.code.str(), ": ", e.detail);
    if (r.code.str() == "RVVV") CHECK(r.tier == ClassRecord::Tier::verified_by_tool);
    if (r.code.str() == "RVTT") CHECK(r.tier == ClassRecord::Tier::paper_asserted);
  }
  CHECK(ones == 14);
  CHECK(twos == 8);
  CHECK(fours == 1);
}
