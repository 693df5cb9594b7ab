#include "mt/census.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mt/diffeo.hpp"
#include "mt/error.hpp"
#include "mt/invariants.hpp"
#include "mt/normalize.hpp"

namespace mt {

std::string Evidence::kind_name(Kind k) {
  switch (k) {
    case Kind::membership: return "membership";
    case Kind::merge_certificate: return "merge-certificate";
    case Kind::separation: return "separation";
    case Kind::fiber_computation: return "fiber-computation";
    case Kind::paper_citation: return "paper-citation";
  }
  return "?";
}

std::string ClassRecord::tier_name(Tier t) {
  return t == Tier::verified_by_tool ? "verified-by-tool" : "paper-asserted";
}

std::vector<Letter> class_successors(Letter l) {
  switch (l) {
    case Letter::R: return {Letter::R, Letter::V};
    case Letter::V:
    case Letter::T: return {Letter::R, Letter::V, Letter::T, Letter::L};
    case Letter::L: return {Letter::R, Letter::V, Letter::T1, Letter::T2, Letter::L1, Letter::L2, Letter::L3};
    default: fail(error_kind::domain, "successors of " + letter_name(l) + " are unsupported beyond level 4");
  }
}

std::vector<RVTWord> enumerate_classes(int level) {
  if (level < 1 || level > max_census_level)
    fail(error_kind::domain, "class enumeration covers levels 1-" + std::to_string(max_census_level));
  std::vector<RVTWord> out;
  auto dfs = [&](auto& self, RVTWord w) -> void {
    if (static_cast<int>(w.size()) == level) {
      out.push_back(w);
      return;
    }
    for (Letter l : class_successors(w.back())) {
      RVTWord next = w;
      next.letters.push_back(l);
      self(self, next);
    }
  };
  dfs(dfs, RVTWord{{Letter::R}});
  return out;
}

int published_orbit_count(const RVTWord& code) {
  static const std::map<std::string, int> multi{{"RVT", 2},  {"RRVT", 2}, {"RVRV", 2}, {"RVVR", 2}, {"RVVV", 2},
                                                {"RVVT", 2}, {"RVTR", 2}, {"RVTV", 2}, {"RVTL", 2}, {"RVTT", 4}};
  if (code.size() < 1 || static_cast<int>(code.size()) > max_census_level)
    fail(error_kind::domain, "orbit counts are known for levels 1-" + std::to_string(max_census_level));
  auto it = multi.find(code.str());
  return it == multi.end() ? 1 : it->second;
}

namespace {

CurveGerm mono(int a, int b, int c, int trunc) {
  auto t = [trunc](int d) { return d == 0 ? TruncSeries(trunc) : TruncSeries::monomial(1, d, trunc); };
  return CurveGerm(t(a), t(b), t(c));
}

std::string gaps_str(const std::vector<int>& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + "}";
}

const std::vector<Direction>& candidates() {
  static const std::vector<Direction> c = [] {
    std::vector<Direction> v;
    for (int a : {1, 0, 2, -1})
      for (int b : {0, 1, 2, -1})
        for (int d : {0, 1, 2, -1})
          if (a || b || d) v.push_back({Rational(a), Rational(b), Rational(d)});
    return v;
  }();
  return c;
}

}  // namespace

CurveGerm rvvv_curve(const Rational& c1, int trunc) {
  TowerPoint p3({0, 1, 1}, std::vector<Rational>(9, 0));
  std::array<TruncSeries, 3> top{TruncSeries::monomial(1, 2, trunc), TruncSeries::monomial(1, 1, trunc),
                                 TruncSeries::monomial(c1, 1, trunc)};
  return lift_from_level(p3, top);
}

std::vector<CurveGerm> representatives(const RVTWord& code, int trunc, std::string* tag) {
  std::string s = code.str();
  auto set_tag = [&](std::string t) {
    if (tag) *tag = std::move(t);
  };
  if (s.empty() || s[0] != 'R') fail(error_kind::domain, "codes start with R");
  if (s == "RVVV") {
    set_tag("curves through the two fiber orbits");
    return {rvvv_curve(1, trunc), rvvv_curve(0, trunc)};
  }
  if (s.find_first_not_of('R') == std::string::npos) {
    set_tag("smooth germ");
    return {mono(1, 0, 0, trunc)};
  }
  // R^k V R^m holds the A_2k curve (t^2, t^(2k+1), 0).
  auto v = s.find('V');
  if (s.find_first_not_of('R', v + 1) == std::string::npos && s.find_first_not_of('R') == v) {
    set_tag("A" + std::to_string(2 * v) + " curve");
    return {mono(2, 2 * static_cast<int>(v) + 1, 0, trunc)};
  }
  for (const auto& row : table2(trunc))
    if (row.code == s) {
      set_tag("catalog normal forms");
      return row.normal_forms;
    }
  set_tag("no catalog curve for this class; witness point only");
  return {};
}

TowerPoint class_witness(const RVTWord& code) {
  if (code.size() == 0 || code.letters[0] != Letter::R) fail(error_kind::domain, "codes start with R");
  TowerPoint p;
  for (std::size_t j = 0; j < code.size(); ++j) {
    bool found = false;
    for (const auto& l : candidates())
      if (classify_direction(p, l) == code.letters[j]) {
        p = extend_point(p, l);
        found = true;
        break;
      }
    if (!found) fail(error_kind::domain, "no candidate direction of type " + letter_name(code.letters[j]));
  }
  if (!(p.code() == code)) fail(error_kind::domain, "witness construction drifted from " + code.str());
  return p;
}

namespace {

ClassRecord build_record(const RVTWord& code, const RvvvReport* rvvv) {
  ClassRecord r;
  r.code = code;
  r.orbit_count = published_orbit_count(code);
  int k = static_cast<int>(code.size());
  std::string s = code.str();

  r.witness = class_witness(code);
  RVTWord realized = rvt_code(realize_point(r.witness), k);
  r.evidence.push_back({Evidence::Kind::membership,
                        "witness point " + r.witness.to_string() + " realized by a regular curve with code " +
                            realized.str(),
                        realized == code});

  std::string tag;
  r.curves = representatives(code, 32, &tag);
  r.note = tag;
  for (const auto& c : r.curves) {
    RVTWord got = rvt_code(c, k);
    r.evidence.push_back({Evidence::Kind::membership, c.to_string() + " has code " + got.str(), got == code});
  }

  r.separated = 1;
  if (s == "RVV") {
    const CurveGerm& a = r.curves[0];
    const CurveGerm& b = r.curves[1];
    bool same = prolong_curve(a, 3).point() == prolong_curve(b, 3).point();
    r.evidence.push_back({Evidence::Kind::membership, "both normal forms pass through the same level-3 point", same});
    for (Rational beta : {Rational(1), Rational(-1)}) {
      CurveGerm pm = CurveGerm::from_terms({{3, 1}}, {{5, 1}, {7, beta}}, {}, 32);
      EquivalenceResult e = equivalence_search(pm, b);
      r.evidence.push_back({Evidence::Kind::merge_certificate,
                            pm.to_string() + " -> " + b.to_string() + ": " + e.kind_name() + " up to t^" +
                                std::to_string(e.verified_trunc),
                            e.kind == EquivalenceResult::Kind::certificate});
    }
    r.note = "two normal forms, one orbit: they split only at level 4 (RVVR)";
  }
  if (s == "RVVR") {
    CurveGerm a = mono(3, 5, 7, 32), b = mono(3, 5, 0, 32);
    bool both = rvt_code(a, 4) == code && rvt_code(b, 4) == code;
    bool apart = !(prolong_curve(a, 4).point() == prolong_curve(b, 4).point());
    r.evidence.push_back({Evidence::Kind::membership,
                          "the two RVV normal forms reach distinct RVVR points", both && apart});
  }
  if (s == "RVVV" && rvvv) {
    r.evidence.push_back({Evidence::Kind::fiber_computation, rvvv->conclusion, rvvv->ok});
    Semigroup s1 = semigroup(r.curves[0], 23), s0 = semigroup(r.curves[1], 23);
    r.evidence.push_back({Evidence::Kind::separation,
                          "curve semigroup gaps " + gaps_str(s1.gaps) + " vs " + gaps_str(s0.gaps),
                          s1.gaps != s0.gaps});
    if (rvvv->ok) r.separated = 2;
  }

  bool all_ok = std::all_of(r.evidence.begin(), r.evidence.end(), [](const Evidence& e) { return e.verified; });
  if (r.orbit_count > 1 || k == max_census_level)
    r.evidence.push_back({Evidence::Kind::paper_citation,
                          "published orbit count " + std::to_string(r.orbit_count) +
                              (r.orbit_count > r.separated ? "; inequivalence of the orbits is not recomputed" : ""),
                          false});
  else
    r.evidence.push_back({Evidence::Kind::paper_citation, "published normal-form table: one orbit", false});
  r.tier = all_ok && r.separated >= r.orbit_count ? ClassRecord::Tier::verified_by_tool
                                                  : ClassRecord::Tier::paper_asserted;
  return r;
}

}  // namespace

Census orbit_census(int level) {
  Census c;
  c.level = level;
  std::vector<RVTWord> codes = enumerate_classes(level);
  std::optional<RvvvReport> rvvv;
  if (level == 4) rvvv = verify_rvvv_split();
  c.records.resize(codes.size());
  std::vector<std::string> errors(codes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < codes.size(); ++i) {
    try {
      c.records[i] = build_record(codes[i], rvvv ? &*rvvv : nullptr);
    } catch (const std::exception& e) {
      errors[i] = codes[i].str() + ": " + e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) fail(error_kind::domain, "census failed: " + e);
  for (const auto& r : c.records) c.total += r.orbit_count;
  return c;
}

RvvvReport verify_rvvv_split(std::uint64_t seed, int jets) {
  RvvvReport rep;
  TowerPoint p3 = chain_representative(IsotropyStage::G3);
  IsotropyConstraintSet g3 = taylor_constraints(IsotropyStage::G3);
  const Direction e10{0, 1, 0}, e11{0, 1, 1};
  auto fail_with = [&](std::string line, std::string jet) {
    rep.ok = false;
    rep.lines.push_back(std::move(line));
    if (!rep.offending) rep.offending = std::move(jet);
  };
  auto jet_str = [](const PolyJet3& j) {
    return "(" + j.phi[0].to_string() + ", " + j.phi[1].to_string() + ", " + j.phi[2].to_string() + ")";
  };

  std::mt19937_64 rng(seed);
  int fixed = 0;
  for (int i = 0; i < jets; ++i) {
    DiffeoJet phi = sample_jet(rng, &g3);
    Direction img = normalized(fiber_action(phi, p3, {e10})[0]);
    if (img == e10)
      ++fixed;
    else
      fail_with("isotropy jet moved [1:0]", jet_str(phi.jet()));
  }
  rep.lines.push_back("[1:0] fixed by " + std::to_string(fixed) + "/" + std::to_string(jets) + " sampled isotropy jets");

  int moved = 0;
  for (int n = 1; moved < 10; ++n) {
    Rational lambda(n % 2 ? (n + 1) / 2 : -(n / 2), 1 + n % 3);
    lambda.canonicalize();
    DiffeoJet phi(PolyJet3::diagonal(1, 1, lambda, default_jet_degree));
    Direction img = normalized(fiber_action(phi, p3, {e11})[0]);
    Direction want{0, 1, lambda};
    if (img == want && isotropy_check(phi, p3))
      ++moved;
    else
      fail_with("(x, y, " + format_rational(lambda) + " z) does not take [1:1] to [1:" + format_rational(lambda) + "]",
                jet_str(phi.jet()));
    if (n > 40) break;
  }
  rep.lines.push_back("diagonal scalings take [1:1] to [1:lambda] for " + std::to_string(moved) + " values of lambda");

  // Diagonal (a, b, c) acts by [beta:gamma] -> [beta b^2 / a^3 : gamma c / a^2].
  int closed = 0, trials = 0;
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{2, 1, 1}, {1, 3, 2}, {-1, 2, 5}, {3, -2, -1}}) {
    for (const Direction& l : {e10, e11, Direction{0, 2, -3}}) {
      ++trials;
      DiffeoJet phi(PolyJet3::diagonal(a, b, c, default_jet_degree));
      Direction img = normalized(fiber_action(phi, p3, {l})[0]);
      Rational A(a), B(b), Cc(c);
      Direction want = normalized({0, l[1] * B * B / (A * A * A), l[2] * Cc / (A * A)});
      if (img == want)
        ++closed;
      else
        fail_with("closed form mismatch for diagonal (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")",
                  jet_str(phi.jet()));
    }
  }
  rep.lines.push_back("closed form for diagonal jets matches " + std::to_string(closed) + "/" +
                      std::to_string(trials) + " fiber computations");

  TowerPoint q0 = extend_point(p3, e10), q1 = extend_point(p3, e11);
  bool codes = q0.code().str() == "RVVV" && q1.code().str() == "RVVV";
  if (!codes) fail_with("representatives are not RVVV points", "");
  rep.lines.push_back("(p3,[1:0]) and (p3,[1:1]) have codes " + q0.code().str() + ", " + q1.code().str());

  bool curves = prolong_curve(rvvv_curve(0), 4).point() == q0 && prolong_curve(rvvv_curve(1), 4).point() == q1;
  if (!curves) fail_with("the RVVV curves do not pass through the representatives", "");
  rep.lines.push_back("the two RVVV curves pass through (p3,[1:0]) and (p3,[1:1])");

  rep.conclusion = rep.ok ? ">= 2 orbits demonstrated; = 2 per paper" : "RVVV split evidence failed";
  return rep;
}

}  // namespace mt
