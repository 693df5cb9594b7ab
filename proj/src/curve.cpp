#include "mt/curve.hpp"

#include <algorithm>
#include <sstream>

#include "mt/error.hpp"

namespace mt {

CurveGerm::CurveGerm(TruncSeries x, TruncSeries y, TruncSeries z) : c_{std::move(x), std::move(y), std::move(z)} {
  for (const auto& s : c_)
    if (sgn(s[0]) != 0) fail(error_kind::domain, "curve germ must vanish at t = 0");
}

CurveGerm CurveGerm::from_terms(const std::vector<std::pair<int, Rational>>& x,
                                const std::vector<std::pair<int, Rational>>& y,
                                const std::vector<std::pair<int, Rational>>& z, int trunc) {
  return CurveGerm(TruncSeries(x, trunc), TruncSeries(y, trunc), TruncSeries(z, trunc));
}

int CurveGerm::trunc() const { return std::min({c_[0].trunc(), c_[1].trunc(), c_[2].trunc()}); }

CurveGerm CurveGerm::truncated(int n) const {
  return CurveGerm(c_[0].truncated(n), c_[1].truncated(n), c_[2].truncated(n));
}

bool CurveGerm::agrees(const CurveGerm& o, int n) const {
  for (int i = 0; i < 3; ++i)
    if (!c_[i].agrees(o.c_[i], n)) return false;
  return true;
}

std::string CurveGerm::to_string() const {
  return "(" + c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + ")";
}

CurveGerm reparametrize(const CurveGerm& c, const TruncSeries& tau) {
  return CurveGerm(series_compose(c.x(), tau), series_compose(c.y(), tau), series_compose(c.z(), tau));
}

CurveGerm scale(const CurveGerm& c, const std::array<Rational, 3>& f) {
  return CurveGerm(f[0] * c.x(), f[1] * c.y(), f[2] * c.z());
}

int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

Poly3 Poly3::variable(int i) {
  Exponent e{0, 0, 0};
  e[i] = 1;
  return monomial(e);
}

Poly3 Poly3::monomial(const Exponent& e, const Rational& c) {
  Poly3 p;
  p.add(e, c);
  return p;
}

void Poly3::add(const Exponent& e, const Rational& c_in) {
  if (sgn(c_in) == 0) return;
  Rational c = c_in;
  c.canonicalize();
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) t_.erase(it);
}

Rational Poly3::coeff(const Exponent& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

int Poly3::degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, total_degree(e));
  return d;
}

int Poly3::min_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = d < 0 ? total_degree(e) : std::min(d, total_degree(e));
  return d;
}

Poly3 Poly3::truncated(int d) const {
  Poly3 r;
  for (const auto& [e, c] : t_)
    if (total_degree(e) <= d) r.t_.emplace(e, c);
  return r;
}

Poly3 Poly3::homogeneous_part(int d) const {
  Poly3 r;
  for (const auto& [e, c] : t_)
    if (total_degree(e) == d) r.t_.emplace(e, c);
  return r;
}

std::string Poly3::to_string() const {
  if (t_.empty()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    Rational a = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = total_degree(e) > 0 && a == 1;
    if (!unit) os << format_rational(a);
    bool need_star = !unit;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
  Poly3 r = a;
  for (const auto& [e, c] : b.terms()) r.add(e, c);
  return r;
}

Poly3 operator-(const Poly3& a, const Poly3& b) {
  Poly3 r = a;
  for (const auto& [e, c] : b.terms()) r.add(e, -c);
  return r;
}

Poly3 operator*(const Rational& k, const Poly3& a) {
  Poly3 r;
  if (sgn(k) == 0) return r;
  for (const auto& [e, c] : a.terms()) r.add(e, k * c);
  return r;
}

Poly3 mul_trunc(const Poly3& a, const Poly3& b, int d) {
  Poly3 r;
  for (const auto& [ea, ca] : a.terms()) {
    if (total_degree(ea) > d) continue;
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      if (total_degree(e) <= d) r.add(e, ca * cb);
    }
  }
  return r;
}

MonomialEvaluator::MonomialEvaluator(const CurveGerm& c) : c_(c) {
  int cap = std::max({c.x().trunc(), c.y().trunc(), c.z().trunc()});
  for (int i = 0; i < 3; ++i) {
    pw_[i].push_back(TruncSeries::constant(1, cap));
    pw_[i].push_back(c[i]);
  }
}

const TruncSeries& MonomialEvaluator::power(int comp, int k) {
  auto& v = pw_[comp];
  while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * c_[comp]);
  return v[k];
}

TruncSeries MonomialEvaluator::monomial(const Exponent& e) {
  TruncSeries r = power(0, e[0]);
  if (e[1] > 0) r = r * power(1, e[1]);
  if (e[2] > 0) r = r * power(2, e[2]);
  return r;
}

TruncSeries MonomialEvaluator::eval(const Poly3& p) {
  TruncSeries acc(c_.trunc());
  for (const auto& [e, c] : p.terms()) acc = acc + c * monomial(e);
  return acc;
}

TruncSeries poly_eval_on_curve(const Poly3& p, const CurveGerm& c) {
  MonomialEvaluator ev(c);
  return ev.eval(p);
}

}  // namespace mt
