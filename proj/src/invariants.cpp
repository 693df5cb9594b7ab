#include "mt/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "mt/error.hpp"
#include "mt/linalg.hpp"
#include "mt/normalize.hpp"

namespace mt {

int multiplicity(const CurveGerm& c) {
  int m = -1;
  for (const auto& s : c.components())
    if (auto o = s.ord()) m = m < 0 ? *o : std::min(m, *o);
  if (m < 0) fail(error_kind::domain, "multiplicity of a curve that is zero up to truncation");
  return m;
}

bool well_parameterized(const CurveGerm& c) {
  int g = 0;
  for (const auto& s : c.components())
    for (const auto& [d, q] : s.terms()) g = std::gcd(g, d);
  return g == 1;
}

namespace {

// Monomials (no constant) with weight a*w0 + b*w1 + c*w2 <= bound, sorted by
// weight, then total degree, then x-heavy first.
std::vector<Exponent> weighted_monomials(const std::array<int, 3>& w, const std::array<bool, 3>& usable, int bound,
                                         const std::vector<Exponent>& excluded) {
  std::vector<Exponent> out;
  auto lim = [&](int i) { return usable[i] ? bound / w[i] : 0; };
  for (int a = 0; a <= lim(0); ++a)
    for (int b = 0; b <= lim(1); ++b)
      for (int c = 0; c <= lim(2); ++c) {
        Exponent e{a, b, c};
        if (total_degree(e) == 0) continue;
        if (a * w[0] + b * w[1] + c * w[2] > bound) continue;
        if (std::find(excluded.begin(), excluded.end(), e) != excluded.end()) continue;
        out.push_back(e);
      }
  auto key = [&](const Exponent& e) {
    return std::make_tuple(e[0] * w[0] + e[1] * w[1] + e[2] * w[2], total_degree(e), -e[0], -e[1]);
  };
  std::sort(out.begin(), out.end(), [&](const Exponent& x, const Exponent& y) { return key(x) < key(y); });
  return out;
}

}  // namespace

ValueEchelon::ValueEchelon(const CurveGerm& c0, int bound, const std::vector<Exponent>& excluded)
    : bound_(bound), rows_(bound + 1), polys_(bound + 1) {
  if (bound < 1) fail(error_kind::domain, "bound must be positive");
  if (c0.trunc() < bound)
    fail(error_kind::insufficient_truncation, "bound " + std::to_string(bound) + " exceeds the curve truncation " +
                                                  std::to_string(c0.trunc()));
  CurveGerm c = c0.truncated(bound);
  std::array<int, 3> w{};
  std::array<bool, 3> usable{};
  for (int i = 0; i < 3; ++i) {
    usable[i] = !c[i].is_zero();
    w[i] = c[i].valuation();
  }
  std::vector<Exponent> mons = weighted_monomials(w, usable, bound, excluded);
  if (mons.empty()) return;
  int lowest = bound + 1;
  for (const auto& e : mons) lowest = std::min(lowest, e[0] * w[0] + e[1] * w[1] + e[2] * w[2]);
  int reachable = bound - lowest + 1, found = 0;

  MonomialEvaluator ev(c);
  for (const auto& e : mons) {
    if (found == reachable) break;
    TruncSeries s = ev.monomial(e);
    std::vector<Rational> v(bound + 1);
    for (int i = 0; i <= bound; ++i) v[i] = s[i];
    Poly3 p = Poly3::monomial(e);
    for (int o = 1; o <= bound; ++o) {
      if (sgn(v[o]) == 0) continue;
      if (rows_[o].empty()) {
        Rational inv = 1 / v[o];
        for (int i = o; i <= bound; ++i) v[i] *= inv;
        rows_[o] = std::move(v);
        polys_[o] = inv * p;
        ++found;
        break;
      }
      Rational f = v[o];
      for (int i = o; i <= bound; ++i)
        if (sgn(rows_[o][i]) != 0) v[i] -= f * rows_[o][i];
      p = p - f * polys_[o];
    }
  }
}

std::vector<int> ValueEchelon::orders() const {
  std::vector<int> r;
  for (int o = 1; o <= bound_; ++o)
    if (!rows_[o].empty()) r.push_back(o);
  return r;
}

bool ValueEchelon::has(int order) const { return order >= 1 && order <= bound_ && !rows_[order].empty(); }

std::optional<Poly3> ValueEchelon::witness(int order) const {
  if (!has(order)) return std::nullopt;
  return polys_[order];
}

std::optional<bool> Semigroup::member(int n) const {
  if (n < 1) return false;
  if (n <= bound) return std::binary_search(elements.begin(), elements.end(), n);
  if (conductor) return true;
  return std::nullopt;
}

Semigroup semigroup(const CurveGerm& c, int bound) {
  if (!well_parameterized(c)) fail(error_kind::domain, "semigroup needs a well-parameterized curve");
  ValueEchelon ech(c, bound);
  Semigroup s;
  s.bound = bound;
  s.elements = ech.orders();
  for (int n = 1; n <= bound; ++n)
    if (!ech.has(n)) s.gaps.push_back(n);
  for (int e : s.elements) s.witnesses.emplace_back(e, *ech.witness(e));
  // [c, bound] inside S with length >= multiplicity forces every n >= c into S.
  int m = multiplicity(c);
  int start = bound + 1;
  while (start > 1 && ech.has(start - 1)) --start;
  if (start <= bound && bound - start + 1 >= m) s.conductor = start;
  return s;
}

std::string ArnoldSymbol::str() const {
  switch (shape) {
    case Shape::planar: return "[" + std::to_string(m) + "," + std::to_string(n) + "]";
    case Shape::space: return "[" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + "]";
    case Shape::mixed: return "[" + std::to_string(m) + ",(" + std::to_string(n) + "," + std::to_string(p) + ")]";
  }
  return "?";
}

ArnoldSymbol arnold_symbol(const CurveGerm& c0) {
  CurveGerm c = linear_normalize(c0).curve;
  int m = multiplicity(c);
  if (m == 1) fail(error_kind::domain, "no symbol detected: smooth germ");
  if (c.y().is_zero()) fail(error_kind::domain, "no symbol detected within truncation: curve is a line");
  c = monomialize_first(c).curve;
  int n = *c.y().ord();
  // Terms of y at multiples of m are removed by y - k x^j.
  std::optional<int> q;
  for (const auto& [d, k] : c.y().terms())
    if (d > n && d % m != 0) {
      q = d;
      break;
    }
  std::optional<int> p = c.z().ord();
  if (p && (!q || *p <= *q)) return {ArnoldSymbol::Shape::space, m, n, *p};
  if (q) return {ArnoldSymbol::Shape::mixed, m, n, *q};
  return {ArnoldSymbol::Shape::planar, m, n, 0};
}

std::string PlanarityVerdict::kind_name() const {
  switch (kind) {
    case Kind::planar: return "planar";
    case Kind::obstructed: return "obstructed";
    case Kind::undetermined: return "undetermined";
  }
  return "?";
}

PlanarityVerdict planarity(const CurveGerm& c, int degree_bound, int order_bound) {
  PlanarityVerdict v{PlanarityVerdict::Kind::undetermined, degree_bound, order_bound, {}, {}};
  if (degree_bound < 1 || order_bound < 1) {
    v.reason = "bounds must be positive";
    return v;
  }
  if (c.trunc() < order_bound) {
    v.reason = "curve truncation " + std::to_string(c.trunc()) + " is below the order bound";
    return v;
  }
  std::vector<Exponent> mons;
  for (int d = 1; d <= degree_bound; ++d)
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) mons.push_back({a, b, d - a - b});
  int cols = static_cast<int>(mons.size());
  RowMatrix m(order_bound, std::vector<Rational>(cols));
  MonomialEvaluator ev(c.truncated(order_bound));
  for (int j = 0; j < cols; ++j) {
    TruncSeries s = ev.monomial(mons[j]);
    for (int r = 1; r <= order_bound; ++r) m[r - 1][j] = s[r];
  }
  std::vector<std::vector<Rational>> ker = kernel_basis(m, cols);
  const std::vector<Rational>* best = nullptr;
  auto cost = [&](const std::vector<Rational>& k) {
    int nz = 0, deg = 0;
    for (int j = 0; j < cols; ++j)
      if (sgn(k[j]) != 0) {
        ++nz;
        deg = std::max(deg, total_degree(mons[j]));
      }
    return std::make_pair(nz, deg);
  };
  for (const auto& k : ker) {
    if (sgn(k[0]) == 0 && sgn(k[1]) == 0 && sgn(k[2]) == 0) continue;
    if (!best || cost(k) < cost(*best)) best = &k;
  }
  if (!best) {
    v.kind = PlanarityVerdict::Kind::obstructed;
    v.reason = "no f with df(0) != 0 and degree <= " + std::to_string(degree_bound) + " has ord(f o c) > " +
               std::to_string(order_bound);
    return v;
  }
  Rational lead = sgn((*best)[0]) != 0 ? (*best)[0] : sgn((*best)[1]) != 0 ? (*best)[1] : (*best)[2];
  for (int j = 0; j < cols; ++j) v.witness.add(mons[j], (*best)[j] / lead);
  if (!ev.eval(v.witness).truncated(order_bound).is_zero())
    fail(error_kind::domain, "planarity witness failed re-substitution");
  v.kind = PlanarityVerdict::Kind::planar;
  v.reason = "ord(f o c) > " + std::to_string(order_bound);
  return v;
}

}  // namespace mt
