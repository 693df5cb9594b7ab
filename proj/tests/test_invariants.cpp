#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <doctest.h>

#include "mt/diffeo.hpp"
#include "mt/error.hpp"
#include "mt/invariants.hpp"
#include "mt/tower.hpp"

using namespace mt;
using namespace mt::testing;

namespace {

CurveGerm mono(int a, int b, int c, int trunc = 32) {
  auto t = [trunc](int d) { return d == 0 ? TruncSeries(trunc) : TruncSeries::monomial(1, d, trunc); };
  return CurveGerm(t(a), t(b), t(c));
}

CurveGerm rvvv_curve(Rational c1, int trunc = 32) {
  TowerPoint p3({0, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0});
  std::array<TruncSeries, 3> top{TruncSeries::monomial(1, 2, trunc), TruncSeries::monomial(1, 1, trunc),
                                 TruncSeries::monomial(c1, 1, trunc)};
  return lift_from_level(p3, top);
}

// Oracle: ord(P o c) over all monomials and their pairwise differences is a lower
// bound on the semigroup; closure under addition of these is checked separately.
bool closed(const Semigroup& s) {
  for (int a : s.elements)
    for (int b : s.elements)
      if (a + b <= s.bound && !std::binary_search(s.elements.begin(), s.elements.end(), a + b)) return false;
  return true;
}

}  // namespace

TEST_CASE("multiplicity") {
  CHECK(multiplicity(mono(2, 3, 0)) == 2);
  CHECK(multiplicity(mono(3, 5, 7)) == 3);
  CurveGerm c = rvvv_curve(1);
  CHECK(multiplicity(c) == 5);
  CHECK(c.x().ord() == 5);
  CHECK(c.y().ord() == 8);
  CHECK(c.z().ord() == 11);
  CHECK_THROWS_AS(multiplicity(CurveGerm(TruncSeries(8), TruncSeries(8), TruncSeries(8))), Error);
}

TEST_CASE("well parameterized") {
  CHECK(well_parameterized(mono(2, 3, 0)));
  CHECK_FALSE(well_parameterized(mono(2, 4, 0)));
  CHECK(well_parameterized(mono(3, 5, 7)));
  CHECK_FALSE(well_parameterized(C({{2, 1}, {6, 3}}, {{4, 1}}, {})));
}

TEST_CASE("semigroup examples") {
  Semigroup a = semigroup(mono(3, 5, 7), 12);
  CHECK(a.gaps == std::vector<int>{1, 2, 4});
  CHECK(a.conductor == 5);
  Semigroup b = semigroup(mono(3, 5, 0), 12);
  CHECK(b.gaps == std::vector<int>{1, 2, 4, 7});
  CHECK(b.conductor == 8);
  Semigroup s = semigroup(mono(1, 0, 0), 10);
  CHECK(s.gaps.empty());
  CHECK(s.elements.size() == 10);
  CHECK(semigroup(mono(2, 3, 0), 10).gaps == std::vector<int>{1});
}

TEST_CASE("semigroup of the RVVV curves") {
  CHECK(semigroup(rvvv_curve(1), 23).gaps == std::vector<int>{1, 2, 3, 4, 6, 7, 9, 12, 14, 17});
  CHECK(semigroup(rvvv_curve(0), 23).gaps == std::vector<int>{1, 2, 3, 4, 6, 7, 9, 11, 12, 14, 17, 19, 22});
  CHECK(semigroup(rvvv_curve(3), 23).gaps == std::vector<int>{1, 2, 3, 4, 6, 7, 9, 12, 14, 17});
}

TEST_CASE("semigroup needs cancellation") {
  // y^2 - x^3 cancels the t^6 terms of (t^2, t^3 + t^4, 0): order 7 from the cancellation.
  CurveGerm c = C({{2, 1}}, {{3, 1}, {4, 1}}, {});
  Semigroup s = semigroup(c, 10);
  CHECK(s.gaps == std::vector<int>{1});
  CurveGerm d = C({{4, 1}}, {{6, 1}, {7, 1}}, {});
  Semigroup sd = semigroup(d, 20);
  // Puiseux pairs (4; 6, 7): generators 4, 6, 13.
  CHECK(sd.gaps == std::vector<int>{1, 2, 3, 5, 7, 9, 11, 15});
}

TEST_CASE("semigroup witnesses check out") {
  for (const CurveGerm& c : {mono(3, 5, 7), mono(3, 5, 0), mono(4, 6, 7), rvvv_curve(1), rvvv_curve(0)}) {
    Semigroup s = semigroup(c, 23);
    CHECK(closed(s));
    REQUIRE(s.witnesses.size() == s.elements.size());
    for (const auto& [n, p] : s.witnesses) CHECK(poly_eval_on_curve(p, c).ord() == n);
  }
}

TEST_CASE("semigroup bound beyond truncation") {
  CHECK_THROWS_AS(semigroup(mono(3, 5, 7, 10), 12), Error);
  try {
    semigroup(mono(3, 5, 7, 10), 12);
  } catch (const Error& e) {
    CHECK(e.kind() == error_kind::insufficient_truncation);
  }
}

TEST_CASE("semigroup membership above the bound") {
  Semigroup s = semigroup(mono(3, 5, 7), 12);
  CHECK(s.member(100) == true);
  CHECK(s.member(4) == false);
  Semigroup t = semigroup(mono(5, 8, 0), 12);
  CHECK_FALSE(t.conductor.has_value());
  CHECK_FALSE(t.member(30).has_value());
}

TEST_CASE("invariants under random transformations") {
  std::mt19937_64 rng(11);
  std::vector<CurveGerm> curves{mono(1, 0, 0), mono(2, 3, 0), mono(2, 5, 0), mono(3, 5, 7),
                                mono(3, 5, 0), mono(3, 4, 5), mono(3, 4, 0), mono(4, 6, 7)};
  for (const auto& c : curves) {
    Semigroup s = semigroup(c, 20);
    for (int trial = 0; trial < 4; ++trial) {
      DiffeoJet phi = sample_jet(rng);
      CurveGerm d = jet_eval_on_curve(phi.jet(), reparametrize(c, random_reparam(rng, 32)));
      CHECK(multiplicity(d) == multiplicity(c));
      CHECK(semigroup(d, 20).gaps == s.gaps);
    }
  }
}

TEST_CASE("arnold symbol") {
  CHECK(arnold_symbol(mono(3, 5, 7)).str() == "[3,5,7]");
  CHECK(arnold_symbol(mono(2, 3, 0)).str() == "[2,3]");
  CHECK(arnold_symbol(C({{3, 1}}, {{5, 1}, {7, 1}}, {})).str() == "[3,(5,7)]");
  CHECK(arnold_symbol(C({{3, 1}}, {{5, 1}, {7, 1}}, {})) == ArnoldSymbol{ArnoldSymbol::Shape::mixed, 3, 5, 7});
  // Linear mixing and reparametrization do not change the symbol.
  CurveGerm c = C({{3, 2}, {4, 1}}, {{3, 2}, {4, 1}, {5, 1}}, {{7, 1}});
  CHECK(arnold_symbol(c).str() == "[3,5,7]");
  CHECK_THROWS_AS(arnold_symbol(mono(1, 0, 0)), Error);
}

TEST_CASE("planarity examples") {
  PlanarityVerdict a = planarity(mono(3, 5, 0, 48));
  CHECK(planarity(mono(3, 5, 0)).kind == PlanarityVerdict::Kind::undetermined);
  REQUIRE(a.kind == PlanarityVerdict::Kind::planar);
  CHECK(a.witness == Poly3::variable(2));

  PlanarityVerdict b = planarity(mono(2, 3, 4, 48));
  REQUIRE(b.kind == PlanarityVerdict::Kind::planar);
  Poly3 expect = Poly3::variable(2) - Poly3::monomial({2, 0, 0}, 1);
  CHECK(b.witness == expect);

  PlanarityVerdict c = planarity(mono(3, 5, 7, 48), 7, 40);
  CHECK(c.kind == PlanarityVerdict::Kind::obstructed);
  CHECK(c.kind_name() == "obstructed");

  PlanarityVerdict u = planarity(mono(3, 5, 7, 20), 7, 40);
  CHECK(u.kind == PlanarityVerdict::Kind::undetermined);
}

TEST_CASE("planarity witness survives transformation") {
  std::mt19937_64 rng(5);
  CurveGerm base = C({{3, 1}}, {{5, 1}, {7, 1}}, {}, 48);
  for (int trial = 0; trial < 5; ++trial) {
    DiffeoJet phi = sample_jet(rng);
    CurveGerm d = jet_eval_on_curve(phi.jet(), reparametrize(base, random_reparam(rng, 48)));
    PlanarityVerdict v = planarity(d, 4, 20);
    REQUIRE(v.kind == PlanarityVerdict::Kind::planar);
    CHECK(poly_eval_on_curve(v.witness, d).valuation() > 20);
  }
}

TEST_CASE("obstruction is monotone in the degree bound") {
  std::mt19937_64 rng(9);
  for (const CurveGerm& c : {mono(3, 5, 7, 48), mono(3, 4, 5, 48), mono(4, 6, 7, 48)}) {
    DiffeoJet phi = sample_jet(rng);
    CurveGerm d = jet_eval_on_curve(phi.jet(), c);
    REQUIRE(planarity(d, 6, 30).kind == PlanarityVerdict::Kind::obstructed);
    for (int D = 1; D < 6; ++D) CHECK(planarity(d, D, 30).kind == PlanarityVerdict::Kind::obstructed);
  }
}
