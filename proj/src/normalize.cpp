#include "mt/normalize.hpp"

#include <algorithm>
#include <map>

#include "mt/error.hpp"
#include "mt/tower.hpp"

namespace mt {

std::string TraceStep::kind_name(Kind k) {
  switch (k) {
    case Kind::reparametrize: return "reparametrize";
    case Kind::coordinate_change: return "coordinate-change";
    case Kind::scale: return "scale";
  }
  return "?";
}

CurveGerm apply_step(const TraceStep& s, const CurveGerm& c) {
  switch (s.kind) {
    case TraceStep::Kind::reparametrize: return reparametrize(c, s.series);
    case TraceStep::Kind::coordinate_change: return jet_eval_on_curve(s.jet, c);
    case TraceStep::Kind::scale: return scale(c, s.factors);
  }
  fail(error_kind::domain, "unknown trace step");
}

CurveGerm replay(const ReductionTrace& t, const CurveGerm& input) {
  CurveGerm c = input;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& s = t.steps[i];
    if (!(c == s.before)) fail(error_kind::domain, "trace replay: input differs from snapshot at step " + std::to_string(i));
    c = apply_step(s, c);
    if (!(c == s.after)) fail(error_kind::domain, "trace replay: output differs from snapshot at step " + std::to_string(i));
  }
  return c;
}

namespace {

void push(Reduction& r, TraceStep s) {
  s.before = r.curve;
  s.after = apply_step(s, r.curve);
  r.curve = s.after;
  r.trace.steps.push_back(std::move(s));
}

void absorb(Reduction& r, const Reduction& o) {
  r.curve = o.curve;
  r.trace.append(o.trace);
  r.notes.insert(r.notes.end(), o.notes.begin(), o.notes.end());
}

TraceStep scale_step(const std::array<Rational, 3>& f, std::string note) {
  TraceStep s;
  s.kind = TraceStep::Kind::scale;
  s.factors = f;
  s.note = std::move(note);
  return s;
}

TraceStep jet_step(PolyJet3 j, std::string note) {
  TraceStep s;
  s.kind = TraceStep::Kind::coordinate_change;
  int d = 1;
  for (const auto& p : j.phi) d = std::max(d, p.degree());
  j.degree = d;
  s.jet = std::move(j);
  s.note = std::move(note);
  return s;
}

TraceStep reparam_step(TruncSeries tau, std::string note) {
  TraceStep s;
  s.kind = TraceStep::Kind::reparametrize;
  s.series = std::move(tau);
  s.note = std::move(note);
  return s;
}

void scale_leading(Reduction& r) {
  std::array<Rational, 3> f{1, 1, 1};
  bool any = false;
  for (int i = 0; i < 3; ++i)
    if (auto o = r.curve[i].ord(); o && r.curve[i][*o] != 1) {
      f[i] = 1 / r.curve[i][*o];
      any = true;
    }
  if (any) push(r, scale_step(f, "leading coefficients to 1"));
}

const char* comp_name(int i) { return i == 0 ? "x" : i == 1 ? "y" : "z"; }

Exponent unit_exp(int i) {
  Exponent e{0, 0, 0};
  e[i] = 1;
  return e;
}

// Prime factorization by trial division; a leftover cofactor counts as prime.
std::map<mpz_class, int> factor(mpz_class n) {
  std::map<mpz_class, int> f;
  if (n < 0) n = -n;
  for (mpz_class p = 2; p * p <= n && p < 1000000; ++p)
    while (n % p == 0) {
      f[p]++;
      n /= p;
    }
  if (n > 1) f[n]++;
  return f;
}

}  // namespace

Reduction linear_normalize(const CurveGerm& c) {
  std::array<TruncSeries, 3> rows = c.components();
  Matrix3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  std::array<int, 3> order{0, 1, 2};
  auto sort_rows = [&]() {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      bool za = rows[a].is_zero(), zb = rows[b].is_zero();
      if (za != zb) return !za;
      return rows[a].valuation() < rows[b].valuation();
    });
  };
  for (;;) {
    sort_rows();
    bool changed = false;
    for (int k = 0; k + 1 < 3 && !changed; ++k) {
      int a = order[k], b = order[k + 1];
      if (rows[a].is_zero() || rows[b].is_zero()) continue;
      int o = *rows[a].ord();
      if (rows[b].valuation() != o) continue;
      Rational f = rows[b][o] / rows[a][o];
      rows[b] = rows[b] - f * rows[a];
      for (int j = 0; j < 3; ++j) m[b][j] -= f * m[a][j];
      changed = true;
    }
    if (!changed) break;
  }
  Matrix3 out{};
  for (int k = 0; k < 3; ++k) out[k] = m[order[k]];
  Reduction r{c, {}, {}};
  Matrix3 id{};
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  if (out != id) push(r, jet_step(PolyJet3::linear(out, 1), "linear change: strictly increasing orders"));
  return r;
}

Reduction monomialize_first(const CurveGerm& c) {
  Reduction r{c, {}, {}};
  auto m = c.x().ord();
  if (!m) fail(error_kind::domain, "monomialize_first needs a nonzero x-component");
  if (r.curve.x()[*m] != 1) push(r, scale_step({1 / r.curve.x()[*m], 1, 1}, "x leading coefficient to 1"));
  TruncSeries u = shift_down(r.curve.x(), *m);
  if (u.term_count() == 1) return r;
  // x = (t R(t))^m with R = U^(1/m); the new parameter is t R(t).
  TruncSeries sigma = shift_up(series_unit_root(u, *m), 1);
  push(r, reparam_step(param_inverse(sigma), "x = t^" + std::to_string(*m) + " exactly"));
  return r;
}

Reduction kill_semigroup_terms(const CurveGerm& c, const Semigroup& s) {
  Reduction r{c, {}, {}};
  int top = c.trunc();
  for (int e = 1; e <= top; ++e)
    for (int i = 0; i < 3; ++i) {
      Rational k = r.curve[i].coeff_or_zero(e);
      if (sgn(k) == 0) continue;
      bool leading = r.curve[i].ord() == e;
      auto mem = s.member(e);
      std::string term = std::string("t^") + std::to_string(e) + " in " + comp_name(i);
      if (!mem) {
        r.notes.push_back(term + ": membership undecided above the semigroup bound");
        continue;
      }
      if (!*mem) continue;
      ValueEchelon ech(r.curve, e, {unit_exp(i)});
      auto w = ech.witness(e);
      if (!w) {
        if (!leading) r.notes.push_back(term + ": not reachable without " + comp_name(i) + " itself");
        continue;
      }
      PolyJet3 j = PolyJet3::identity(1);
      j.phi[i] = j.phi[i] - k * *w;
      push(r, jet_step(std::move(j), "remove " + term + " with " + comp_name(i) + " -> " + comp_name(i) + " - (" +
                                         format_rational(k) + ")*(" + w->to_string() + ")"));
    }
  return r;
}

ZariskiResult zariski_step(const CurveGerm& c) {
  ZariskiResult r;
  r.curve = c;
  auto xt = c.x().terms();
  if (xt.size() != 1 || xt[0].second != 1) fail(error_kind::domain, "zariski_step needs x = t^n exactly");
  int n = xt[0].first;
  Semigroup s = semigroup(c, c.trunc());
  bool attempted = false;
  for (int i = 1; i < 3; ++i) {
    auto mi = c[i].ord();
    if (!mi) continue;
    int nu = 0;
    for (const auto& [d, q] : c[i].terms())
      if (d > *mi && s.member(d) == false) {
        nu = d;
        break;
      }
    if (nu == 0) continue;
    attempted = true;
    int target = nu + n - *mi;
    std::string term = std::string("t^") + std::to_string(nu) + " in " + comp_name(i);
    if (target > c.trunc()) {
      r.notes.push_back(term + ": needed order " + std::to_string(target) + " beyond truncation");
      continue;
    }
    ValueEchelon ech(c, target, {unit_exp(0)});
    auto w = ech.witness(target);
    if (!w) {
      r.notes.push_back(term + ": order " + std::to_string(target) + " is not a value without x");
      continue;
    }
    Rational b = c[i][nu], lead = c[i][*mi];
    Rational a = b * n / (lead * *mi);
    PolyJet3 j = PolyJet3::identity(1);
    j.phi[0] = j.phi[0] + a * *w;
    push(r, jet_step(std::move(j), "zariski: remove " + term + " with x -> x + (" + format_rational(a) + ")*(" +
                                       w->to_string() + ")"));
    absorb(r, monomialize_first(r.curve));
    r.status = ZariskiResult::Status::applied;
    r.nu = nu;
    return r;
  }
  r.status = attempted ? ZariskiResult::Status::not_applicable : ZariskiResult::Status::unchanged;
  return r;
}

Reduction scale_normalize(const CurveGerm& c) {
  Reduction r{c, {}, {}};
  scale_leading(r);
  for (int i = 0; i < 3; ++i) {
    auto t = r.curve[i].terms();
    if (t.size() < 2) continue;
    int d = t[1].first - t[0].first;
    Rational beta = t[1].second;
    // t -> lambda t multiplies the second coefficient by lambda^d; strip d-th powers and, for odd d, the sign.
    Rational lambda = 1;
    for (const auto& [p, k] : factor(beta.get_num())) {
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k / d);
      lambda /= Rational(pk);
    }
    for (const auto& [p, k] : factor(beta.get_den())) {
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k / d);
      lambda *= Rational(pk);
    }
    if (sgn(beta) < 0 && d % 2 == 1) lambda = -lambda;
    lambda.canonicalize();
    if (lambda != 1) {
      push(r, reparam_step(TruncSeries::monomial(lambda, 1, r.curve.trunc()), "t -> " + format_rational(lambda) + " t"));
      scale_leading(r);
    }
    break;
  }
  return r;
}

Reduction reduce_pipeline(const CurveGerm& c) {
  if (!well_parameterized(c)) fail(error_kind::domain, "reduction needs a well-parameterized curve");
  Reduction r = linear_normalize(c);
  absorb(r, monomialize_first(r.curve));
  scale_leading(r);
  for (int iter = 0; iter < 64; ++iter) {
    bool changed = false;
    Semigroup s = semigroup(r.curve, r.curve.trunc());
    Reduction k = kill_semigroup_terms(r.curve, s);
    if (!k.trace.empty()) {
      absorb(r, k);
      changed = true;
    }
    ZariskiResult z = zariski_step(r.curve);
    if (z.status == ZariskiResult::Status::applied) {
      absorb(r, z);
      changed = true;
    }
    if (!changed) {
      r.notes.insert(r.notes.end(), k.notes.begin(), k.notes.end());
      r.notes.insert(r.notes.end(), z.notes.begin(), z.notes.end());
      break;
    }
  }
  absorb(r, linear_normalize(r.curve));
  absorb(r, scale_normalize(r.curve));
  return r;
}

std::vector<CatalogRow> table2(int trunc) {
  auto mono = [trunc](int a, int b, int c) {
    auto t = [trunc](int d) { return d == 0 ? TruncSeries(trunc) : TruncSeries::monomial(1, d, trunc); };
    return CurveGerm(t(a), t(b), t(c));
  };
  return {
      {"R", {mono(1, 0, 0)}},
      {"RR", {mono(1, 0, 0)}},
      {"RV", {mono(2, 3, 0)}},
      {"RRR", {mono(1, 0, 0)}},
      {"RRV", {mono(2, 5, 0)}},
      {"RVR", {mono(2, 3, 0)}},
      {"RVV", {mono(3, 5, 7), mono(3, 5, 0)}},
      {"RVT", {mono(3, 4, 5), mono(3, 4, 0)}},
      {"RVL", {mono(4, 6, 7)}},
  };
}

CatalogReduction reduce_catalog(const CurveGerm& c) {
  std::string code;
  for (int k = 3; k >= 1 && code.empty(); --k) {
    try {
      code = rvt_code(c, k).str();
    } catch (const Error& e) {
      if (e.kind() == error_kind::insufficient_truncation) throw;
    }
  }
  if (code.empty()) fail(error_kind::outside_catalog, "curve is not a germ of any point at levels 1-3");
  const CatalogRow* row = nullptr;
  auto rows = table2(c.trunc());
  for (const auto& r : rows)
    if (r.code == code) row = &r;
  if (!row) fail(error_kind::outside_catalog, "class " + code + " has no catalog row");
  Reduction red = reduce_pipeline(c);
  for (const auto& nf : row->normal_forms)
    if (red.curve.agrees(nf, red.curve.trunc())) return {code, nf.truncated(red.curve.trunc()), red.trace};
  std::string why = "reduction of a " + code + " curve stopped at " + red.curve.to_string();
  for (const auto& n : red.notes) why += "; " + n;
  fail(error_kind::outside_catalog, why);
}

CurveGerm apply_certificate(const Certificate& cert, const CurveGerm& c) {
  return jet_eval_on_curve(cert.phi, reparametrize(c, cert.tau));
}

Certificate trace_certificate(const ReductionTrace& t, int degree, int trunc) {
  Certificate cert{PolyJet3::identity(degree), TruncSeries::variable(trunc)};
  for (const auto& s : t.steps) {
    switch (s.kind) {
      case TraceStep::Kind::reparametrize:
        cert.tau = series_compose(cert.tau, s.series);
        break;
      case TraceStep::Kind::coordinate_change: {
        PolyJet3 j = s.jet;
        j.degree = degree;
        cert.phi = jet_compose(j, cert.phi);
        break;
      }
      case TraceStep::Kind::scale:
        cert.phi = jet_compose(PolyJet3::diagonal(s.factors[0], s.factors[1], s.factors[2], degree), cert.phi);
        break;
    }
  }
  return cert;
}

std::string EquivalenceResult::kind_name() const {
  switch (kind) {
    case Kind::certificate: return "certificate";
    case Kind::separated: return "separated";
    case Kind::unknown: return "unknown";
  }
  return "?";
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string point_code(const CurveGerm& c) {
  for (int k = 4; k >= 1; --k) {
    try {
      return prolong_curve(c, k).point().code().str();
    } catch (const Error&) {
    }
  }
  return "";
}

}  // namespace

EquivalenceResult equivalence_search(const CurveGerm& c1, const CurveGerm& c2, const EquivalenceBudget& budget) {
  EquivalenceResult res;
  if (!well_parameterized(c1) || !well_parameterized(c2))
    fail(error_kind::domain, "equivalence_search needs well-parameterized curves");
  int trunc = std::min({budget.trunc, c1.trunc(), c2.trunc()});
  auto separated = [&](std::string inv, std::string v1, std::string v2) {
    res.kind = EquivalenceResult::Kind::separated;
    res.invariant = std::move(inv);
    res.value1 = std::move(v1);
    res.value2 = std::move(v2);
    return res;
  };
  int m1 = multiplicity(c1), m2 = multiplicity(c2);
  if (m1 != m2) return separated("multiplicity", std::to_string(m1), std::to_string(m2));
  int sb = std::min(trunc, default_semigroup_bound);
  Semigroup s1 = semigroup(c1, sb), s2 = semigroup(c2, sb);
  if (s1.gaps != s2.gaps) return separated("semigroup gaps up to " + std::to_string(sb), join(s1.gaps), join(s2.gaps));
  std::string k1 = point_code(c1), k2 = point_code(c2);
  if (!k1.empty() && !k2.empty() && k1.size() == k2.size() && k1 != k2) return separated("rvt code", k1, k2);
  PlanarityVerdict p1 = planarity(c1, default_planarity_degree, std::min(trunc, default_planarity_order));
  PlanarityVerdict p2 = planarity(c2, default_planarity_degree, std::min(trunc, default_planarity_order));
  if (p1.kind != PlanarityVerdict::Kind::undetermined && p2.kind != PlanarityVerdict::Kind::undetermined &&
      p1.kind != p2.kind)
    return separated("planarity", p1.kind_name(), p2.kind_name());

  Reduction r1 = reduce_pipeline(c1.truncated(trunc)), r2 = reduce_pipeline(c2.truncated(trunc));
  if (!r1.curve.agrees(r2.curve, trunc)) {
    res.detail = "reductions differ: " + r1.curve.to_string() + " vs " + r2.curve.to_string();
    return res;
  }
  int degree = budget.jet_degree > 0 ? budget.jet_degree : trunc / m1;
  Certificate a = trace_certificate(r1.trace, degree, trunc);
  Certificate b = trace_certificate(r2.trace, degree, trunc);
  // c2 = b.phi^-1 o a.phi o c1 o a.tau o b.tau^-1.
  Certificate cert{jet_compose(jet_inverse(b.phi), a.phi), series_compose(a.tau, param_inverse(b.tau))};
  CurveGerm img = apply_certificate(cert, c1);
  if (!img.agrees(c2, trunc)) {
    res.detail = "certificate failed verification (jet degree " + std::to_string(degree) + ")";
    return res;
  }
  res.kind = EquivalenceResult::Kind::certificate;
  res.cert = std::move(cert);
  res.verified_trunc = trunc;
  return res;
}

}  // namespace mt
