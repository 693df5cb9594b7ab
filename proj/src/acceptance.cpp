#include "mt/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "mt/census.hpp"
#include "mt/diffeo.hpp"
#include "mt/error.hpp"
#include "mt/invariants.hpp"
#include "mt/io.hpp"
#include "mt/normalize.hpp"
#include "mt/tower.hpp"

namespace mt {

namespace {

// Collects sub-check failures; a criterion passes when none were recorded.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failed_.size() < 4) failed_.push_back(what);
    if (!ok) ++bad_;
  }
  bool ok() const { return bad_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(total_) + " checks";
    std::string s = std::to_string(bad_) + "/" + std::to_string(total_) + " failed:";
    for (const auto& f : failed_) s += " [" + f + "]";
    return s;
  }

 private:
  int total_ = 0, bad_ = 0;
  std::vector<std::string> failed_;
};

CurveGerm mono(int a, int b, int c, int trunc = 64) {
  auto t = [trunc](int d) { return d == 0 ? TruncSeries(trunc) : TruncSeries::monomial(1, d, trunc); };
  return CurveGerm(t(a), t(b), t(c));
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

TruncSeries random_reparam(std::mt19937_64& rng, int trunc) {
  std::uniform_int_distribution<int> n(-5, 5), d(1, 3);
  auto q = [&] {
    Rational r(n(rng), d(rng));
    r.canonicalize();
    return r;
  };
  Rational lead = q();
  if (sgn(lead) == 0) lead = 1;
  std::vector<std::pair<int, Rational>> t{{1, lead}};
  for (int i = 2; i < 6; ++i) t.emplace_back(i, q());
  return TruncSeries(t, trunc);
}

bool same_span(const std::array<std::vector<Rational>, 2>& span, std::vector<int> units) {
  // span{a, b} equals span{e_i, e_j}: both vectors supported on the units and independent there.
  int i = units[0], j = units[1];
  for (const auto& v : span)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (static_cast<int>(k) != i && static_cast<int>(k) != j && sgn(v[k]) != 0) return false;
  return span[0][i] * span[1][j] - span[0][j] * span[1][i] != 0;
}

void cusp(Checks& c) {
  Prolongation p = prolong_curve(mono(2, 3, 0), 1);
  const TruncSeries& u = p.coords[3];
  const TruncSeries& v = p.coords[4];
  c.expect(u.terms() == std::vector<std::pair<int, Rational>>{{1, Rational(3, 2)}}, "u1 = " + u.to_string());
  c.expect(v.is_zero(), "v1 = " + v.to_string());
  c.expect(u.trunc() >= 1 && v.trunc() >= 1, "fiber series determined");
}

void membership(Checks& c) {
  struct Row {
    CurveGerm curve;
    std::vector<std::string> codes;
  };
  std::vector<Row> rows{{mono(1, 0, 0), {"R", "RR", "RRR"}},   {mono(2, 3, 0), {"RV", "RVR"}},
                        {mono(2, 5, 0), {"RRV"}},              {mono(3, 5, 7), {"RVV"}},
                        {mono(3, 5, 0), {"RVV"}},              {mono(3, 4, 5), {"RVT"}},
                        {mono(3, 4, 0), {"RVT"}},              {mono(4, 6, 7), {"RVL"}}};
  for (const auto& r : rows)
    for (const auto& code : r.codes) {
      std::string got = rvt_code(r.curve, static_cast<int>(code.size())).str();
      c.expect(got == code, r.curve.to_string() + " -> " + got + " expected " + code);
    }
}

void semigroups(Checks& c) {
  c.expect(semigroup(mono(3, 5, 7), 12).gaps == std::vector<int>{1, 2, 4}, "(t3,t5,t7) gaps");
  c.expect(semigroup(mono(3, 5, 0), 12).gaps == std::vector<int>{1, 2, 4, 7}, "(t3,t5,0) gaps");
  CurveGerm a = rvvv_curve(1), b = rvvv_curve(0);
  c.expect(rvt_code(a, 4).str() == "RVVV" && rvt_code(b, 4).str() == "RVVV", "chain curves are RVVV");
  c.expect(multiplicity(a) == 5 && a.y().ord() == 8 && a.z().ord() == 11, "first curve orders (5, 8, 11)");
  c.expect(multiplicity(b) == 5 && b.y().ord() == 8 && b.z().valuation() >= 12, "second curve orders (5, 8, >11)");
  std::vector<int> ga = semigroup(a, 23).gaps, gb = semigroup(b, 23).gaps;
  c.expect(ga == std::vector<int>{1, 2, 3, 4, 6, 7, 9, 12, 14, 17}, "first gaps " + join(ga));
  // The published pattern lists 6,7,9,11,12,14,17,19,22 above the multiplicity.
  c.expect(gb == std::vector<int>{1, 2, 3, 4, 6, 7, 9, 11, 12, 14, 17, 19, 22}, "second gaps " + join(gb));
}

void enumeration(Checks& c) {
  std::vector<std::vector<std::string>> published{
      {"R"},
      {"RR", "RV"},
      {"RRR", "RRV", "RVR", "RVV", "RVT", "RVL"},
      {"RRRR", "RRRV", "RRVR", "RRVV", "RRVT", "RRVL", "RVRR", "RVRV", "RVVR", "RVVV", "RVVT", "RVVL",
       "RVTR", "RVTV", "RVTT", "RVTL", "RVLR", "RVLV", "RVLT_1", "RVLT_2", "RVLL_1", "RVLL_2", "RVLL_3"}};
  std::vector<std::size_t> sizes{1, 2, 6, 23};
  for (int k = 1; k <= 4; ++k) {
    auto got = enumerate_classes(k);
    std::vector<std::string> want;
    for (const auto& w : published[k - 1]) want.push_back(RVTWord::parse(w).str());
    std::vector<std::string> have;
    for (const auto& w : got) have.push_back(w.str());
    c.expect(have == want, "level " + std::to_string(k) + " list");
    c.expect(got.size() == sizes[k - 1], "level " + std::to_string(k) + " count " + std::to_string(got.size()));
  }
}

void census(Checks& c) {
  std::vector<int> totals{1, 2, 7, 34};
  for (int k = 1; k <= 4; ++k) {
    Census cs = orbit_census(k);
    c.expect(cs.total == totals[k - 1], "level " + std::to_string(k) + " total " + std::to_string(cs.total));
    for (const auto& r : cs.records) {
      bool cited = false, tool = false;
      for (const auto& e : r.evidence) {
        cited |= e.kind == Evidence::Kind::paper_citation;
        tool |= e.kind != Evidence::Kind::paper_citation;
        if (e.kind != Evidence::Kind::paper_citation) c.expect(e.verified, r.code.str() + ": " + e.detail);
      }
      c.expect(cited && tool, r.code.str() + " evidence populated");
    }
    if (k == 3) {
      std::vector<int> per;
      for (const auto& r : cs.records) per.push_back(r.orbit_count);
      c.expect(per == std::vector<int>{1, 1, 1, 1, 2, 1}, "level 3 per-class counts");
    }
    if (k == 4) {
      std::vector<std::string> twos{"RRVT", "RVRV", "RVVR", "RVVV", "RVVT", "RVTR", "RVTV", "RVTL"};
      int ones = 0;
      for (const auto& r : cs.records) {
        std::string s = r.code.str();
        bool two = std::find(twos.begin(), twos.end(), s) != twos.end();
        int want = s == "RVTT" ? 4 : two ? 2 : 1;
        c.expect(r.orbit_count == want, s + " orbit count");
        ones += r.orbit_count == 1;
        if (s == "RVVV") c.expect(r.tier == ClassRecord::Tier::verified_by_tool, "RVVV verified by tool");
      }
      c.expect(ones == 14, "14 single-orbit classes");
    }
  }
}

void appendix_reduction(Checks& c) {
  CurveGerm target = mono(3, 5, 0, 32);
  for (Rational b : {Rational(1), Rational(-1)}) {
    CurveGerm src = CurveGerm::from_terms({{3, 1}}, {{5, 1}, {7, b}}, {}, 32);
    EquivalenceResult e = equivalence_search(src, target);
    c.expect(e.kind == EquivalenceResult::Kind::certificate, src.to_string() + ": " + e.kind_name() + " " + e.detail);
    if (!e.cert) continue;
    // Replay through the serialized certificate.
    Certificate back = io::certificate_from(io::parse_text(io::dump(io::certificate_json(*e.cert))));
    CurveGerm img = apply_certificate(back, src);
    c.expect(img.trunc() >= 32 && img.agrees(target, 32), "Phi o c o tau = target up to t^32");
    c.expect(det3(back.phi.linear_part()) != 0 && back.tau.ord() == 1, "certificate is an RL-move");
  }
}

void pipeline(Checks& c) {
  CurveGerm src = CurveGerm::from_terms({{3, 1}, {4, 1}}, {{5, 1}}, {{7, 1}}, 32);
  CatalogReduction r = reduce_catalog(src);
  c.expect(r.code == "RVV", "code " + r.code);
  c.expect(r.normal_form.agrees(mono(3, 5, 7, 32), r.normal_form.trunc()), "normal form " + r.normal_form.to_string());
  c.expect(replay(r.trace, src).agrees(r.normal_form, r.normal_form.trunc()), "trace replays");
  // The first reparametrization is t = T(1 - T/3) + O(T^3).
  const TraceStep* first = nullptr;
  for (const auto& s : r.trace.steps)
    if (s.kind == TraceStep::Kind::reparametrize && !first) first = &s;
  c.expect(first && first->series.agrees(TruncSeries({{1, 1}, {2, Rational(-1, 3)}}, 2), 2),
           "first reparametrization T(1 - T/3)");
  if (first) {
    CurveGerm x = reparametrize(src, first->series.truncated(2));
    c.expect(x.x().coeff_or_zero(3) == 1 && x.x().coeff_or_zero(4) == 0, "x = T^3 + O(T^5)");
  }
  std::vector<int> gaps = semigroup(src, 24).gaps;
  for (const auto& s : r.trace.steps)
    c.expect(semigroup(s.after, 24).gaps == gaps, "semigroup preserved at step " + s.note);
}

void planar(Checks& c) {
  PlanarityVerdict a = planarity(mono(3, 5, 7), 7, 40);
  c.expect(a.kind == PlanarityVerdict::Kind::obstructed, "(t3,t5,t7) " + a.kind_name());
  for (const CurveGerm& g : {mono(3, 5, 0), mono(2, 3, 4)}) {
    PlanarityVerdict v = planarity(g, 7, 40);
    c.expect(v.kind == PlanarityVerdict::Kind::planar, g.to_string() + " " + v.kind_name());
    if (v.kind == PlanarityVerdict::Kind::planar)
      c.expect(poly_eval_on_curve(v.witness, g).valuation() > 40, "witness " + v.witness.to_string());
  }
  PlanarityVerdict w = planarity(mono(2, 3, 4), 7, 40);
  c.expect(w.witness == Poly3::variable(2) - Poly3::monomial({2, 0, 0}, 1), "witness z - x^2");
}

void hyperplanes(Checks& c) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& code : enumerate_classes(k)) {
      TowerPoint p = class_witness(code);
      Letter last = code.back();
      std::size_t want = last == Letter::R ? 1 : (last == Letter::V || last == Letter::T) ? 2 : 3;
      if (last != Letter::R && last != Letter::V && last != Letter::T && last != Letter::L) continue;
      c.expect(arrangement_at(p).size() == want, code.str() + " arrangement size");
    }
  TowerPoint p2({0, 1}, std::vector<Rational>(7, 0));
  Direction l{0, 0, 1};
  TowerPoint p3 = extend_point(p2, l);
  c.expect(p3.code().str() == "RVL", "p3 code " + p3.code().str());
  CriticalHyperplane d12 = prolong_hyperplane(p2.arrangement()[0], l, p3);
  CriticalHyperplane d21 = prolong_hyperplane(p2.arrangement()[1], l, p3);
  c.expect(d12.name() == "delta^1_2" && d21.name() == "delta^2_1", "hyperplane names");
  // Ambient order x, y, z, u1, v1, u2, v2, u3, v3.
  c.expect(same_span(ambient_span(p3, d12), {6, 8}), "delta^1_2 = span{d/dv2, d/dv3}");
  c.expect(same_span(ambient_span(p3, d21), {6, 7}), "delta^2_1 = span{d/dv2, d/du3}");
}

void isotropy(Checks& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 101);
  struct Target {
    IsotropyStage stage;
    std::string name;
  };
  for (const Target& t : {Target{IsotropyStage::G2, "phi3_y(0)=0"}, Target{IsotropyStage::G3, "phi3_xx(0)=0"}}) {
    IsotropyConstraintSet cs = taylor_constraints(t.stage);
    TowerPoint p = chain_representative(t.stage);
    const TaylorConstraint* tc = nullptr;
    for (const auto& k : cs.constraints)
      if (k.name() == t.name) tc = &k;
    c.expect(tc != nullptr, "constraint " + t.name + " present");
    if (!tc) continue;
    int done = 0;
    for (int i = 0; done < 20; ++i) {
      PolyJet3 j = sample_jet(rng, &cs).jet();
      Rational bump(i % 2 ? -(1 + i % 5) : 1 + i % 4, 1 + i % 3);
      bump.canonicalize();
      j.phi[tc->component].add(tc->partial, bump);
      if (sgn(det3(j.linear_part())) == 0) continue;
      ++done;
      c.expect(!isotropy_check(DiffeoJet(j), p), "violating " + t.name + " still fixes " + p.code().str());
    }
  }
}

void rvvv(Checks& c, std::uint64_t seed) {
  RvvvReport r = verify_rvvv_split(seed, 20);
  c.expect(r.ok, r.offending ? "offending jet " + *r.offending : "report failed");
  c.expect(r.lines.size() == 5, "report has five parts");
  if (r.lines.size() == 5) {
    c.expect(r.lines[0] == "[1:0] fixed by 20/20 sampled isotropy jets", r.lines[0]);
    c.expect(r.lines[1] == "diagonal scalings take [1:1] to [1:lambda] for 10 values of lambda", r.lines[1]);
    c.expect(r.lines[2].find("12/12") != std::string::npos, r.lines[2]);
  }
  c.expect(r.conclusion == ">= 2 orbits demonstrated; = 2 per paper", r.conclusion);
}

void properties(Checks& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 7);
  auto small = [&] {
    Rational q(std::uniform_int_distribution<int>(-5, 5)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
    q.canonicalize();
    return q;
  };
  // (a) the action does not depend on the realizing curve.
  for (int trial = 0; trial < 50; ++trial) {
    int k = 1 + trial % 4;
    TowerPoint p = sample_point(rng, k);
    DiffeoJet f = sample_jet(rng);
    Rational a, b;
    do {
      a = small();
      b = small();
    } while (classify_direction(p, {1, a, b}) != Letter::R);
    TowerPoint via = prolong_apply_through(f, p, {{1, a}, {2, small()}}, {{1, b}, {2, small()}});
    c.expect(via == prolong_apply(f, p), "realizing curves disagree at " + p.to_string());
  }
  // (b) codes and semigroups survive random RL-moves.
  std::vector<std::pair<CurveGerm, int>> catalog{{mono(1, 0, 0, 24), 3}, {mono(2, 3, 0, 24), 3},
                                                 {mono(2, 5, 0, 24), 3}, {mono(3, 5, 7, 24), 3},
                                                 {mono(3, 5, 0, 24), 3}, {mono(3, 4, 5, 24), 3},
                                                 {mono(3, 4, 0, 24), 3}, {mono(4, 6, 7, 24), 3}};
  for (const auto& [g, k] : catalog) {
    std::string code = rvt_code(g, k).str();
    std::vector<int> gaps = semigroup(g, 16).gaps;
    for (int trial = 0; trial < 20; ++trial) {
      CurveGerm d = jet_eval_on_curve(sample_jet(rng).jet(), reparametrize(g, random_reparam(rng, 24)));
      c.expect(rvt_code(d, k).str() == code, g.to_string() + " code changed");
      c.expect(semigroup(d, 16).gaps == gaps, g.to_string() + " semigroup changed");
    }
  }
  // (c) functoriality of prolonged composition.
  for (int trial = 0; trial < 20; ++trial) {
    TowerPoint p = sample_point(rng, 1 + trial % 4);
    DiffeoJet f = sample_jet(rng), g = sample_jet(rng);
    c.expect(prolong_apply(compose(f, g), p) == prolong_apply(f, prolong_apply(g, p)), "functoriality");
  }
  // (d) projection and prolongation round trips.
  for (int trial = 0; trial < 20; ++trial) {
    int k = 1 + trial % 4;
    TowerPoint p = sample_point(rng, k);
    CurveGerm g = realize_point(p);
    Prolongation pr = prolong_curve(g, k);
    c.expect(pr.point() == p, "realize/prolong round trip at " + p.to_string());
    for (int i = 1; i < k; ++i)
      c.expect(project_point(p, i) == prolong_curve(g, i).point(), "projection to level " + std::to_string(i));
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  struct Spec {
    const char* name;
    double budget;
    std::function<void(Checks&)> run;
  };
  std::vector<Spec> specs{
      {"cusp prolongation", 1, cusp},
      {"normal-form membership", 5, membership},
      {"semigroups", 60, semigroups},
      {"class enumeration", 5, enumeration},
      {"orbit census", 60, census},
      {"(t3,t5+-t7,0) certificates", 10, appendix_reduction},
      {"normal-form pipeline", 30, pipeline},
      {"planarity", 30, planar},
      {"hyperplane geometry", 5, hyperplanes},
      {"isotropy constraints", 30, [seed](Checks& c) { isotropy(c, seed); }},
      {"RVVV split", 30, [seed](Checks& c) { rvvv(c, seed); }},
      {"property suites", 120, [seed](Checks& c) { properties(c, seed); }},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i) + 1;
    r.name = specs[i].name;
    r.budget = specs[i].budget;
    Checks c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      specs[i].run(c);
      r.detail = c.summary();
      r.pass = c.ok();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass && r.seconds > r.budget) {
      r.pass = false;
      r.detail += "; over the time budget";
    }
    out.push_back(r);
  }
  return out;
}

std::string format_criterion(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s)", r.seconds);
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << ": " << r.detail
     << buf;
  return os.str();
}

}  // namespace mt
