#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <doctest.h>

#include "mt/diffeo.hpp"
#include "mt/error.hpp"
#include "mt/normalize.hpp"
#include "mt/tower.hpp"

using namespace mt;
using namespace mt::testing;

namespace {

CurveGerm mono(int a, int b, int c, int trunc = 32) {
  auto t = [trunc](int d) { return d == 0 ? TruncSeries(trunc) : TruncSeries::monomial(1, d, trunc); };
  return CurveGerm(t(a), t(b), t(c));
}

void check_sound(const Reduction& r, const CurveGerm& input) {
  CHECK(replay(r.trace, input) == r.curve);
  for (const auto& s : r.trace.steps) {
    if (s.kind == TraceStep::Kind::reparametrize) CHECK(s.series.ord() == 1);
    if (s.kind == TraceStep::Kind::coordinate_change) CHECK(det3(s.jet.linear_part()) != 0);
    if (s.kind == TraceStep::Kind::scale)
      for (const auto& f : s.factors) CHECK(f != 0);
  }
}

}  // namespace

TEST_CASE("monomialize the first component") {
  CurveGerm c = C({{3, 1}, {4, 2}}, {{5, 1}}, {{7, 1}});
  Reduction r = monomialize_first(c);
  check_sound(r, c);
  CHECK(r.curve.x() == TruncSeries::monomial(1, 3, r.curve.x().trunc()));

  CurveGerm d = C({{3, 1}, {4, Rational(1, 2)}, {7, 3}}, {{5, 1}, {7, 2}}, {});
  Reduction rd = monomialize_first(d);
  check_sound(rd, d);
  CHECK(rd.curve.x().term_count() == 1);

  CurveGerm e = mono(3, 5, 0);
  Reduction re = monomialize_first(e);
  CHECK(re.trace.empty());
  CHECK(re.curve == e);

  CHECK_THROWS_AS(monomialize_first(mono(0, 2, 3)), Error);
}

TEST_CASE("the paper's first reparametrization step") {
  // t = T(1 - a T / 3) turns t^3 + a t^4 into T^3 + O(T^5).
  Rational a(2);
  CurveGerm c = C({{3, 1}, {4, a}}, {{5, 1}}, {{7, 1}});
  TruncSeries tau = S({{1, 1}, {2, -a / 3}});
  CurveGerm d = reparametrize(c, tau);
  CHECK(d.x().coeff_or_zero(3) == 1);
  CHECK(d.x().coeff_or_zero(4) == 0);
  CHECK(d.x().coeff_or_zero(5) != 0);
}

TEST_CASE("zariski step") {
  for (Rational b : {Rational(1), Rational(-1), Rational(2, 3)}) {
    CurveGerm c = C({{3, 1}}, {{5, 1}, {7, b}}, {});
    ZariskiResult z = zariski_step(c);
    REQUIRE(z.status == ZariskiResult::Status::applied);
    CHECK(z.nu == 7);
    check_sound(z, c);
    CHECK(z.curve.x() == TruncSeries::monomial(1, 3, z.curve.x().trunc()));
    CHECK(z.curve.y().coeff_or_zero(5) == 1);
    CHECK(z.curve.y().coeff_or_zero(6) == 0);
    CHECK(z.curve.y().coeff_or_zero(7) == 0);
    CHECK(z.curve.z().is_zero());
  }
  ZariskiResult u = zariski_step(mono(3, 5, 0));
  CHECK(u.status == ZariskiResult::Status::unchanged);
  CHECK(u.trace.empty());
  CHECK_THROWS_AS(zariski_step(C({{3, 1}, {4, 1}}, {{5, 1}}, {})), Error);
}

TEST_CASE("zariski step raises the smallest gap exponent") {
  CurveGerm c = C({{3, 1}}, {{5, 1}, {7, 1}}, {});
  int nu = 7;
  for (int i = 0; i < 3; ++i) {
    ZariskiResult z = zariski_step(c);
    if (z.status != ZariskiResult::Status::applied) break;
    CHECK(z.nu >= nu);
    Semigroup s = semigroup(z.curve, z.curve.trunc());
    for (const auto& [d, q] : z.curve.y().terms())
      if (d > 5 && s.member(d) == false) CHECK(d > z.nu);
    nu = z.nu + 1;
    c = z.curve;
  }
}

TEST_CASE("kill semigroup terms") {
  CurveGerm a = C({{3, 1}, {8, 1}}, {{5, 1}}, {{7, 1}});
  Reduction ra = kill_semigroup_terms(a, semigroup(a, 24));
  check_sound(ra, a);
  CHECK(ra.curve.agrees(mono(3, 5, 7), 32));

  CurveGerm b = C({{3, 1}}, {{5, 1}}, {{7, 1}, {9, 1}});
  Reduction rb = kill_semigroup_terms(b, semigroup(b, 24));
  check_sound(rb, b);
  CHECK(rb.curve.agrees(mono(3, 5, 7), 32));

  CurveGerm c = mono(3, 5, 7);
  Reduction rc = kill_semigroup_terms(c, semigroup(c, 24));
  CHECK(rc.trace.empty());

  // t^7 is a gap of (t^3, t^5, 0): left in place.
  CurveGerm d = C({{3, 1}}, {{5, 1}, {7, 1}}, {});
  Reduction rd = kill_semigroup_terms(d, semigroup(d, 24));
  CHECK(rd.curve.y().coeff_or_zero(7) == 1);
}

TEST_CASE("scale normalize") {
  CurveGerm a = C({{3, 2}}, {{5, 5}}, {});
  Reduction ra = scale_normalize(a);
  check_sound(ra, a);
  CHECK(ra.curve == mono(3, 5, 0));

  for (Rational beta : {Rational(4), Rational(9, 4), Rational(-25)}) {
    CurveGerm c = C({{3, 1}}, {{5, 1}, {7, beta}}, {});
    Reduction r = scale_normalize(c);
    check_sound(r, c);
    CHECK(r.curve.x().terms().size() == 1);
    CHECK(r.curve.y().coeff_or_zero(5) == 1);
    CHECK(r.curve.y().coeff_or_zero(7) == (sgn(beta) > 0 ? 1 : -1));
  }
  // 2 is not a square: the square class survives.
  CurveGerm d = C({{3, 1}}, {{5, 1}, {7, 8}}, {});
  CHECK(scale_normalize(d).curve.y().coeff_or_zero(7) == 2);

  CurveGerm e = mono(3, 5, 0);
  CHECK(scale_normalize(e).trace.empty());
}

TEST_CASE("linear normalize") {
  CurveGerm c = C({{3, 1}, {5, 1}}, {{3, 2}, {7, 1}}, {{2, 1}});
  Reduction r = linear_normalize(c);
  check_sound(r, c);
  int prev = 0;
  for (int i = 0; i < 3; ++i)
    if (!r.curve[i].is_zero()) {
      CHECK(r.curve[i].valuation() > prev);
      prev = r.curve[i].valuation();
    }
  CHECK(linear_normalize(mono(3, 5, 7)).trace.empty());
}

TEST_CASE("catalog reduction") {
  CatalogReduction a = reduce_catalog(C({{3, 1}, {4, 1}}, {{5, 1}}, {{7, 1}}));
  CHECK(a.code == "RVV");
  CHECK(a.normal_form.agrees(mono(3, 5, 7), 32));

  for (Rational b : {Rational(1), Rational(-1)}) {
    CatalogReduction r = reduce_catalog(C({{3, 1}}, {{5, 1}, {7, b}}, {}));
    CHECK(r.code == "RVV");
    CHECK(r.normal_form.agrees(mono(3, 5, 0), 32));
  }

  CatalogReduction c = reduce_catalog(mono(2, 3, 0));
  CHECK(c.normal_form == mono(2, 3, 0));
  CHECK(c.trace.empty());

  CHECK_THROWS_AS(reduce_catalog(mono(5, 8, 11)), Error);
}

TEST_CASE("catalog reduction preserves the semigroup at every step") {
  CurveGerm c = C({{3, 1}, {4, 1}}, {{5, 1}}, {{7, 1}});
  CatalogReduction r = reduce_catalog(c);
  Semigroup s = semigroup(c, 24);
  REQUIRE_FALSE(r.trace.empty());
  CHECK(replay(r.trace, c).agrees(r.normal_form, 32));
  for (const auto& st : r.trace.steps) {
    CHECK(semigroup(st.after, 24).gaps == s.gaps);
    CHECK(multiplicity(st.after) == 3);
  }
}

TEST_CASE("catalog reduction of disguised normal forms") {
  std::mt19937_64 rng(3);
  for (const auto& row : table2(40)) {
    for (const auto& nf : row.normal_forms) {
      for (int trial = 0; trial < 2; ++trial) {
        DiffeoJet phi = sample_jet(rng);
        CurveGerm d = jet_eval_on_curve(phi.jet(), reparametrize(nf, random_reparam(rng, 40)));
        CatalogReduction r = reduce_catalog(d);
        INFO(row.code, " ", nf);
        if (row.code.size() == 3) {
          CHECK(r.code == row.code);
        }
        CHECK(replay(r.trace, d).agrees(r.normal_form, r.normal_form.trunc()));
        bool listed = false;
        for (const auto& cand : table2(40))
          for (const auto& f : cand.normal_forms)
            if (cand.code == r.code && f.agrees(r.normal_form, r.normal_form.trunc())) listed = true;
        CHECK(listed);
      }
    }
  }
}

TEST_CASE("reduction is idempotent") {
  for (const auto& row : table2(32))
    for (const auto& nf : row.normal_forms) {
      CatalogReduction r = reduce_catalog(nf);
      CHECK(r.trace.empty());
      CHECK(r.normal_form == nf);
    }
}

TEST_CASE("trace certificates") {
  CurveGerm c = C({{3, 1}, {4, 1}}, {{5, 1}, {6, 2}}, {{7, 1}});
  Reduction r = reduce_pipeline(c);
  Certificate cert = trace_certificate(r.trace, 32 / 3, 32);
  CHECK(apply_certificate(cert, c).agrees(r.curve, 32));
}

TEST_CASE("equivalence search") {
  CurveGerm a = mono(3, 5, 0);
  EquivalenceResult same = equivalence_search(a, a);
  REQUIRE(same.kind == EquivalenceResult::Kind::certificate);
  CHECK(apply_certificate(*same.cert, a).agrees(a, 32));

  for (Rational b : {Rational(1), Rational(-1)}) {
    CurveGerm c = C({{3, 1}}, {{5, 1}, {7, b}}, {});
    EquivalenceResult e = equivalence_search(c, a);
    REQUIRE(e.kind == EquivalenceResult::Kind::certificate);
    CHECK(e.verified_trunc == 32);
    CHECK(apply_certificate(*e.cert, c).agrees(a, 32));
  }

  EquivalenceResult sep = equivalence_search(mono(3, 5, 7), a);
  CHECK(sep.kind == EquivalenceResult::Kind::separated);
  CHECK(sep.invariant.rfind("semigroup", 0) == 0);

  EquivalenceResult mult = equivalence_search(mono(2, 3, 0), a);
  CHECK(mult.kind == EquivalenceResult::Kind::separated);
  CHECK(mult.invariant == "multiplicity");
}

TEST_CASE("equivalence of random disguises") {
  std::mt19937_64 rng(21);
  for (const CurveGerm& nf : {mono(3, 5, 7, 24), mono(3, 4, 5, 24), mono(2, 5, 0, 16)}) {
    int trunc = nf.trunc();
    DiffeoJet phi = sample_jet(rng);
    CurveGerm d = jet_eval_on_curve(phi.jet(), reparametrize(nf, random_reparam(rng, trunc)));
    EquivalenceResult e = equivalence_search(d, nf);
    REQUIRE(e.kind == EquivalenceResult::Kind::certificate);
    CHECK(e.verified_trunc == trunc);
    CHECK(apply_certificate(*e.cert, d).agrees(nf, trunc));
  }
}
