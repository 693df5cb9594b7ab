#include "mt/tower.hpp"

#include <algorithm>
#include <sstream>

#include "mt/error.hpp"

namespace mt {

std::string letter_name(Letter l) {
  switch (l) {
    case Letter::R: return "R";
    case Letter::V: return "V";
    case Letter::T: return "T";
    case Letter::L: return "L";
    case Letter::T1: return "T1";
    case Letter::T2: return "T2";
    case Letter::L1: return "L1";
    case Letter::L2: return "L2";
    case Letter::L3: return "L3";
  }
  return "?";
}

Letter parse_letter(const std::string& s) {
  for (Letter l : {Letter::R, Letter::V, Letter::T, Letter::L, Letter::T1, Letter::T2, Letter::L1, Letter::L2,
                   Letter::L3})
    if (letter_name(l) == s) return l;
  fail(error_kind::parse, "unknown RVT letter \"" + s + "\"");
}

RVTWord RVTWord::parse(const std::string& s) {
  RVTWord w;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::string tok(1, s[i]);
    if (i + 2 < s.size() && s[i + 1] == '_') ++i;
    if (i + 1 < s.size() && (s[i + 1] == '1' || s[i + 1] == '2' || s[i + 1] == '3')) tok += s[++i];
    w.letters.push_back(parse_letter(tok));
  }
  return w;
}

std::string RVTWord::str() const {
  std::string s;
  for (Letter l : letters) s += letter_name(l);
  return s;
}

int chart_for(const Direction& l) {
  for (int i = 0; i < 3; ++i)
    if (sgn(l[i]) != 0) return i;
  fail(error_kind::domain, "zero direction");
}

Direction normalized(const Direction& l) {
  Rational d = l[chart_for(l)];
  return {l[0] / d, l[1] / d, l[2] / d};
}

std::array<int, 2> others(int d) {
  if (d == 0) return {1, 2};
  if (d == 1) return {0, 2};
  return {0, 1};
}

bool CriticalHyperplane::contains(const Direction& l) const {
  return sgn(normal[0] * l[0] + normal[1] * l[1] + normal[2] * l[2]) == 0;
}

std::string CriticalHyperplane::name() const {
  if (age == 0) return "V" + std::to_string(birth);
  return "delta^" + std::to_string(age) + "_" + std::to_string(birth);
}

namespace {

CriticalHyperplane vertical_plane(int level) { return {level, 0, {1, 0, 0}}; }

CriticalHyperplane prolong_normal(const CriticalHyperplane& delta, int d) {
  auto o = others(d);
  CriticalHyperplane h{delta.birth, delta.age + 1, {0, delta.normal[o[0]], delta.normal[o[1]]}};
  if (sgn(h.normal[1]) == 0 && sgn(h.normal[2]) == 0)
    fail(error_kind::domain, "degenerate hyperplane prolongation");
  return h;
}

std::vector<CriticalHyperplane> next_arrangement(const std::vector<CriticalHyperplane>& arr, const Direction& l,
                                                 int level) {
  int d = chart_for(l);
  std::vector<CriticalHyperplane> r{vertical_plane(level)};
  for (const auto& h : arr)
    if (h.contains(l)) r.push_back(prolong_normal(h, d));
  return r;
}

}  // namespace

TowerPoint::TowerPoint() : coords_(3), arr_(1) {}

TowerPoint::TowerPoint(std::vector<int> chart, std::vector<Rational> coords)
    : chart_(std::move(chart)), coords_(std::move(coords)), arr_(1) {
  for (auto& q : coords_) q.canonicalize();
  int k = level();
  if (static_cast<int>(coords_.size()) != 3 + 2 * k)
    fail(error_kind::domain, "point of level " + std::to_string(k) + " needs " + std::to_string(3 + 2 * k) +
                                 " coordinates, got " + std::to_string(coords_.size()));
  for (int j = 0; j < k; ++j) {
    int d = chart_[j];
    if (d < 0 || d > 2) fail(error_kind::domain, "chart step must be 0, 1 or 2");
    Direction l = direction(j);
    if (chart_for(l) != d) fail(error_kind::domain, "point not in its priority chart at level " + std::to_string(j + 1));
    code_.letters.push_back(classify_in(arr_[j], l));
    arr_.push_back(next_arrangement(arr_[j], l, j + 1));
  }
}

Direction TowerPoint::direction(int j) const {
  if (j < 0 || j >= level()) fail(error_kind::domain, "direction level out of range");
  int d = chart_[j];
  auto o = others(d);
  Direction l{};
  l[d] = 1;
  l[o[0]] = coords_[3 + 2 * j];
  l[o[1]] = coords_[4 + 2 * j];
  return l;
}

std::array<int, 3> TowerPoint::triple_indices(int j) const {
  std::array<int, 3> t{0, 1, 2};
  for (int i = 1; i <= j; ++i) t = {t[chart_[i - 1]], 3 + 2 * (i - 1), 4 + 2 * (i - 1)};
  return t;
}

std::string TowerPoint::to_string() const {
  std::ostringstream os;
  os << "level " << level() << " chart [";
  for (std::size_t i = 0; i < chart_.size(); ++i) os << (i ? "," : "") << chart_[i];
  os << "] coords (";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << format_rational(coords_[i]);
  os << ")";
  return os.str();
}

TowerPoint extend_point(const TowerPoint& p, const Direction& l) {
  Direction n = normalized(l);
  int d = chart_for(n);
  auto o = others(d);
  std::vector<int> chart = p.chart();
  chart.push_back(d);
  std::vector<Rational> coords = p.coords();
  coords.push_back(n[o[0]]);
  coords.push_back(n[o[1]]);
  return TowerPoint(std::move(chart), std::move(coords));
}

TowerPoint project_point(const TowerPoint& p, int i) {
  if (i < 0 || i > p.level()) fail(error_kind::domain, "projection level out of range");
  std::vector<int> chart(p.chart().begin(), p.chart().begin() + i);
  std::vector<Rational> coords(p.coords().begin(), p.coords().begin() + 3 + 2 * i);
  return TowerPoint(std::move(chart), std::move(coords));
}

Letter classify_in(const std::vector<CriticalHyperplane>& arr, const Direction& l) {
  chart_for(l);
  std::vector<const CriticalHyperplane*> tangents;
  for (const auto& h : arr)
    if (!h.is_vertical()) tangents.push_back(&h);
  std::sort(tangents.begin(), tangents.end(),
            [](const CriticalHyperplane* a, const CriticalHyperplane* b) { return a->birth > b->birth; });
  bool in_v = false;
  std::vector<int> in_t;
  for (const auto& h : arr)
    if (h.is_vertical() && h.contains(l)) in_v = true;
  for (std::size_t i = 0; i < tangents.size(); ++i)
    if (tangents[i]->contains(l)) in_t.push_back(static_cast<int>(i));
  std::size_t hits = (in_v ? 1 : 0) + in_t.size();
  bool refined = tangents.size() == 2;
  if (hits == 0) return Letter::R;
  if (hits == 1) {
    if (in_v) return Letter::V;
    if (!refined) return Letter::T;
    return in_t[0] == 0 ? Letter::T1 : Letter::T2;
  }
  if (hits == 2) {
    if (!refined) return Letter::L;
    if (!in_v) return Letter::L3;
    return in_t[0] == 0 ? Letter::L1 : Letter::L2;
  }
  fail(error_kind::domain, "direction lies in three critical hyperplanes");
}

Letter classify_direction(const TowerPoint& p, const Direction& l) { return classify_in(p.arrangement(), l); }

CriticalHyperplane prolong_hyperplane(const CriticalHyperplane& delta, const Direction& l, const TowerPoint& q) {
  if (!delta.contains(l)) fail(error_kind::domain, "direction is not in the hyperplane " + delta.name());
  int d = chart_for(l);
  if (q.level() == 0 || q.chart().back() != d) fail(error_kind::domain, "q is not the point (p, l)");
  return prolong_normal(delta, d);
}

std::vector<CriticalHyperplane> arrangement_at(const TowerPoint& p) {
  if (p.level() < 1) fail(error_kind::domain, "arrangement needs level >= 1");
  return p.arrangement();
}

std::array<std::vector<Rational>, 3> ambient_frame(const TowerPoint& p) {
  int k = p.level();
  std::size_t n = 3 + 2 * k;
  auto unit = [n](int i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    return e;
  };
  std::array<std::vector<Rational>, 3> f{unit(0), unit(1), unit(2)};
  for (int j = 1; j <= k; ++j) {
    Direction l = p.direction(j - 1);
    std::vector<Rational> z(n);
    for (int i = 0; i < 3; ++i)
      for (std::size_t m = 0; m < n; ++m) z[m] += l[i] * f[i][m];
    f = {z, unit(3 + 2 * (j - 1)), unit(4 + 2 * (j - 1))};
  }
  return f;
}

std::array<std::vector<Rational>, 2> ambient_span(const TowerPoint& p, const CriticalHyperplane& h) {
  // Kernel basis of a functional on the frame, mapped to ambient vectors.
  int piv = chart_for(h.normal);
  auto o = others(piv);
  auto f = ambient_frame(p);
  std::array<std::vector<Rational>, 2> r;
  for (int s = 0; s < 2; ++s) {
    Direction v{};
    v[o[s]] = 1;
    v[piv] = -h.normal[o[s]] / h.normal[piv];
    r[s].assign(f[0].size(), 0);
    for (int i = 0; i < 3; ++i)
      for (std::size_t m = 0; m < f[0].size(); ++m) r[s][m] += v[i] * f[i][m];
  }
  return r;
}

std::array<TruncSeries, 3> Prolongation::triple(int j) const {
  std::array<int, 3> t{0, 1, 2};
  for (int i = 1; i <= j; ++i) t = {t[chart[i - 1]], 3 + 2 * (i - 1), 4 + 2 * (i - 1)};
  return {coords[t[0]], coords[t[1]], coords[t[2]]};
}

TowerPoint Prolongation::point() const {
  std::vector<Rational> c;
  for (const auto& s : coords) c.push_back(s.eval_zero());
  return TowerPoint(chart, std::move(c));
}

namespace {

struct StepData {
  int r;
  int d;
  Direction dir;
  std::array<TruncSeries, 3> deriv;
};

StepData derivative_step(const std::array<TruncSeries, 3>& t, int level) {
  StepData s{0, 0, {}, {derivative(t[0]), derivative(t[1]), derivative(t[2])}};
  int r = -1;
  for (const auto& d : s.deriv)
    if (auto o = d.ord()) r = r < 0 ? *o : std::min(r, *o);
  if (r < 0)
    fail(error_kind::insufficient_truncation,
         level == 0 ? "curve is constant up to truncation"
                    : "derivatives vanish up to truncation at level " + std::to_string(level));
  for (const auto& d : s.deriv)
    if (d.trunc() < r)
      fail(error_kind::insufficient_truncation, "direction undetermined at level " + std::to_string(level));
  s.r = r;
  for (int i = 0; i < 3; ++i) s.dir[i] = s.deriv[i][r];
  s.d = chart_for(s.dir);
  return s;
}

}  // namespace

Direction Prolongation::top_direction() const { return derivative_step(triple(level()), level()).dir; }

Prolongation prolong_curve(const CurveGerm& c, int k) {
  if (k < 0) fail(error_kind::domain, "negative level");
  Prolongation p;
  p.coords = {c.x(), c.y(), c.z()};
  std::array<TruncSeries, 3> t = c.components();
  for (int j = 0; j < k; ++j) {
    StepData s = derivative_step(t, j);
    auto o = others(s.d);
    TruncSeries u = series_div(s.deriv[o[0]], s.deriv[s.d]);
    TruncSeries v = series_div(s.deriv[o[1]], s.deriv[s.d]);
    p.chart.push_back(s.d);
    p.orders.push_back(s.r);
    p.coords.push_back(u);
    p.coords.push_back(v);
    t = {t[s.d], u, v};
  }
  return p;
}

RVTWord rvt_code(const CurveGerm& c, int k) {
  if (k < 1) fail(error_kind::domain, "rvt_code needs level >= 1");
  Prolongation pr = prolong_curve(c, k);
  TowerPoint p = pr.point();
  Letter top = classify_direction(p, pr.top_direction());
  if (top != Letter::R)
    fail(error_kind::domain, "level-" + std::to_string(k) + " direction is critical (" + letter_name(top) +
                                 "); the curve is not in the germ set of its level-" + std::to_string(k) + " point");
  return p.code();
}

CurveGerm lift_from_level(const TowerPoint& p, const std::array<TruncSeries, 3>& top) {
  int k = p.level();
  auto idx = p.triple_indices(k);
  for (int i = 0; i < 3; ++i)
    if (top[i].eval_zero() != p.coords()[idx[i]])
      fail(error_kind::domain, "lift does not start at the point");
  for (int i = 0; i < 3; ++i)
    if (sgn(p.coords()[i]) != 0) fail(error_kind::domain, "curves are based at the origin of R^3");
  std::array<TruncSeries, 3> t = top;
  for (int j = k; j >= 1; --j) {
    auto below = p.triple_indices(j - 1);
    int d = p.chart()[j - 1];
    auto o = others(d);
    TruncSeries dw = derivative(t[0]);
    std::array<TruncSeries, 3> prev{TruncSeries(0), TruncSeries(0), TruncSeries(0)};
    prev[d] = t[0];
    prev[o[0]] = integral(t[1] * dw, p.coords()[below[o[0]]]);
    prev[o[1]] = integral(t[2] * dw, p.coords()[below[o[1]]]);
    t = prev;
  }
  return CurveGerm(t[0], t[1], t[2]);
}

CurveGerm realize_point_with(const TowerPoint& p, const TruncSeries& u_tail, const TruncSeries& v_tail) {
  int k = p.level();
  if (k < 1) fail(error_kind::domain, "realize_point needs level >= 1");
  if (sgn(u_tail.eval_zero()) != 0 || sgn(v_tail.eval_zero()) != 0)
    fail(error_kind::domain, "realizing tails must vanish at 0");
  int n = std::min(u_tail.trunc(), v_tail.trunc());
  Direction l{1, u_tail[1], v_tail[1]};
  if (classify_direction(p, l) != Letter::R) fail(error_kind::domain, "realizing direction is not regular");
  auto idx = p.triple_indices(k);
  std::array<TruncSeries, 3> top{TruncSeries({{0, p.coords()[idx[0]]}, {1, 1}}, n),
                                 TruncSeries::constant(p.coords()[idx[1]], n) + u_tail,
                                 TruncSeries::constant(p.coords()[idx[2]], n) + v_tail};
  return lift_from_level(p, top);
}

CurveGerm realize_point(const TowerPoint& p, int trunc) {
  if (p.level() < 1) fail(error_kind::domain, "realize_point needs level >= 1");
  // Smallest slopes (a, b) making (1, a, b) regular.
  for (int s = 0;; ++s)
    for (int a = 0; a <= s; ++a) {
      int b = s - a;
      if (classify_direction(p, {1, a, b}) == Letter::R)
        return realize_point_with(p, TruncSeries::monomial(a, 1, trunc), TruncSeries::monomial(b, 1, trunc));
    }
}

}  // namespace mt
