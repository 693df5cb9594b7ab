#include "mt/series.hpp"

#include <algorithm>
#include <sstream>

#include "mt/error.hpp"

namespace mt {

namespace {

void need_trunc(int n, const char* what) {
  if (n < 0) fail(error_kind::insufficient_truncation, std::string("insufficient truncation in ") + what);
}

// Dense product truncated at n; unknown input coefficients are never read
// past the caller-certified bound.
std::vector<Rational> raw_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int n) {
  std::vector<Rational> r(n + 1);
  int na = std::min<int>(a.size() - 1, n);
  for (int i = 0; i <= na; ++i) {
    if (sgn(a[i]) == 0) continue;
    int nb = std::min<int>(b.size() - 1, n - i);
    for (int j = 0; j <= nb; ++j)
      if (sgn(b[j]) != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<Rational> padded(const std::vector<Rational>& a, int n) {
  std::vector<Rational> r(n + 1);
  for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i) r[i] = a[i];
  return r;
}

}  // namespace

TruncSeries::TruncSeries(int trunc) {
  need_trunc(trunc, "series construction");
  c_.resize(trunc + 1);
}

TruncSeries::TruncSeries(const std::vector<std::pair<int, Rational>>& terms, int trunc) : TruncSeries(trunc) {
  for (const auto& [d, q] : terms) {
    if (d < 0) fail(error_kind::domain, "negative degree in series");
    if (d > trunc) continue;
    Rational c = q;
    c.canonicalize();
    c_[d] += c;
  }
}

TruncSeries TruncSeries::monomial(const Rational& c, int deg, int trunc) {
  return TruncSeries({{deg, c}}, trunc);
}

TruncSeries TruncSeries::from_dense(std::vector<Rational> c) {
  need_trunc(static_cast<int>(c.size()) - 1, "series construction");
  TruncSeries s;
  s.c_ = std::move(c);
  return s;
}

const Rational& TruncSeries::operator[](int d) const {
  if (d < 0 || d > trunc())
    fail(error_kind::insufficient_truncation,
         "coefficient of degree " + std::to_string(d) + " unknown (trunc " + std::to_string(trunc()) + ")");
  return c_[d];
}

Rational TruncSeries::coeff_or_zero(int d) const { return (d >= 0 && d <= trunc()) ? c_[d] : Rational(0); }

std::optional<int> TruncSeries::ord() const {
  for (int i = 0; i <= trunc(); ++i)
    if (sgn(c_[i]) != 0) return i;
  return std::nullopt;
}

int TruncSeries::valuation() const { return ord().value_or(trunc() + 1); }

std::vector<std::pair<int, Rational>> TruncSeries::terms() const {
  std::vector<std::pair<int, Rational>> r;
  for (int i = 0; i <= trunc(); ++i)
    if (sgn(c_[i]) != 0) r.emplace_back(i, c_[i]);
  return r;
}

std::size_t TruncSeries::term_count() const {
  return std::count_if(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) != 0; });
}

TruncSeries TruncSeries::truncated(int n) const {
  need_trunc(n, "truncation");
  TruncSeries r = *this;
  if (n < trunc()) r.c_.resize(n + 1);
  return r;
}

bool TruncSeries::agrees(const TruncSeries& o, int n) const {
  if (n > trunc() || n > o.trunc()) return false;
  for (int i = 0; i <= n; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::string TruncSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, q] : terms()) {
    Rational a = abs(q);
    os << (sgn(q) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (d == 0 || a != 1) os << format_rational(a);
    if (d > 0) os << var;
    if (d > 1) os << "^" << d;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << trunc() + 1 << ")";
  return os.str();
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.trunc(), b.trunc());
  std::vector<Rational> r(n + 1);
  for (int i = 0; i <= n; ++i) r[i] = a.dense()[i] + b.dense()[i];
  return TruncSeries::from_dense(std::move(r));
}

TruncSeries operator-(const TruncSeries& a) {
  std::vector<Rational> r = a.dense();
  for (auto& q : r) q = -q;
  return TruncSeries::from_dense(std::move(r));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const Rational& k, const TruncSeries& a) {
  std::vector<Rational> r = a.dense();
  for (auto& q : r) q *= k;
  return TruncSeries::from_dense(std::move(r));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  int ta = a.trunc(), tb = b.trunc();
  int n = std::min({ta + b.valuation(), tb + a.valuation(), std::max(ta, tb)});
  return TruncSeries::from_dense(raw_mul(padded(a.dense(), std::min(n, ta)), padded(b.dense(), std::min(n, tb)), n));
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }

TruncSeries series_pow(const TruncSeries& a, int n) {
  if (n < 0) fail(error_kind::domain, "negative series power");
  TruncSeries r = TruncSeries::constant(1, a.trunc());
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

TruncSeries derivative(const TruncSeries& a) {
  need_trunc(a.trunc() - 1, "derivative");
  std::vector<Rational> r(a.trunc());
  for (int i = 1; i <= a.trunc(); ++i) r[i - 1] = a.dense()[i] * i;
  return TruncSeries::from_dense(std::move(r));
}

TruncSeries integral(const TruncSeries& a, const Rational& c0) {
  std::vector<Rational> r(a.trunc() + 2);
  r[0] = c0;
  for (int i = 0; i <= a.trunc(); ++i) r[i + 1] = a.dense()[i] / (i + 1);
  return TruncSeries::from_dense(std::move(r));
}

TruncSeries shift_down(const TruncSeries& a, int r) {
  if (r == 0) return a;
  need_trunc(a.trunc() - r, "division by a power of t");
  for (int i = 0; i < r; ++i)
    if (sgn(a.dense()[i]) != 0) fail(error_kind::domain, "series not divisible by t^" + std::to_string(r));
  return TruncSeries::from_dense(std::vector<Rational>(a.dense().begin() + r, a.dense().end()));
}

TruncSeries shift_up(const TruncSeries& a, int r) {
  std::vector<Rational> c(r);
  c.insert(c.end(), a.dense().begin(), a.dense().end());
  return TruncSeries::from_dense(std::move(c));
}

TruncSeries series_inverse(const TruncSeries& a) {
  const auto& u = a.dense();
  if (sgn(u[0]) == 0) fail(error_kind::domain, "inverse of a non-unit series");
  int n = a.trunc();
  std::vector<Rational> v(n + 1);
  Rational inv0 = 1 / u[0];
  v[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i)
      if (sgn(u[i]) != 0) acc += u[i] * v[k - i];
    v[k] = -inv0 * acc;
  }
  return TruncSeries::from_dense(std::move(v));
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
  auto r = b.ord();
  if (!r) fail(error_kind::insufficient_truncation, "division by a series that is zero up to truncation");
  return shift_down(a, *r) * series_inverse(shift_down(b, *r));
}

TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner) {
  if (sgn(inner.dense()[0]) != 0) fail(error_kind::domain, "composition with an inner series of order 0");
  int m = inner.valuation();
  int to = outer.trunc(), ti = inner.trunc();
  int oo = outer.valuation();
  long long bound1 = static_cast<long long>(to + 1) * m - 1;
  long long bound2 = static_cast<long long>(ti) + static_cast<long long>(std::max(oo - 1, 0)) * m;
  int n = static_cast<int>(std::min({bound1, bound2, static_cast<long long>(std::max(to, ti))}));
  std::vector<Rational> in = padded(inner.dense(), std::min(n, ti));
  std::vector<Rational> acc(n + 1);
  acc[0] = outer.dense()[0];
  std::vector<Rational> pw(n + 1);
  pw[0] = 1;
  for (int k = 1; k <= to && static_cast<long long>(k) * m <= n; ++k) {
    pw = raw_mul(pw, in, n);
    const Rational& c = outer.dense()[k];
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= n; ++i)
      if (sgn(pw[i]) != 0) acc[i] += c * pw[i];
  }
  return TruncSeries::from_dense(std::move(acc));
}

TruncSeries series_unit_power(const TruncSeries& s, const Rational& alpha) {
  const auto& a = s.dense();
  if (a[0] != 1) fail(error_kind::domain, "unit power needs constant term 1");
  int n = s.trunc();
  std::vector<Rational> u(n + 1);
  u[0] = 1;
  Rational ap1 = alpha + 1;
  for (int j = 1; j <= n; ++j) {
    Rational acc = 0;
    for (int k = 1; k <= j; ++k)
      if (sgn(a[k]) != 0) acc += (ap1 * k - j) * a[k] * u[j - k];
    u[j] = acc / j;
  }
  return TruncSeries::from_dense(std::move(u));
}

TruncSeries series_unit_root(const TruncSeries& s, int m) {
  if (m <= 0) fail(error_kind::domain, "root index must be positive");
  return series_unit_power(s, Rational(1, m));
}

TruncSeries param_inverse(const TruncSeries& s) {
  if (s.ord() != 1) fail(error_kind::domain, "param_inverse needs a series of order exactly 1");
  int n = s.trunc();
  // Lagrange reversion: g_k = [t^(k-1)] h^k / k with h = t / s.
  TruncSeries h = series_inverse(shift_down(s, 1));
  std::vector<Rational> g(n + 1);
  TruncSeries hp = TruncSeries::constant(1, h.trunc());
  for (int k = 1; k <= n; ++k) {
    hp = hp * h;
    g[k] = hp[k - 1] / k;
  }
  return TruncSeries::from_dense(std::move(g));
}

}  // namespace mt
