#include "mt/jet.hpp"

#include <algorithm>
#include <map>

#include "mt/error.hpp"

namespace mt {

PolyJet3 PolyJet3::identity(int degree) {
  PolyJet3 j;
  j.degree = degree;
  for (int i = 0; i < 3; ++i) j.phi[i] = Poly3::variable(i);
  return j;
}

PolyJet3 PolyJet3::linear(const Matrix3& m, int degree) {
  PolyJet3 j;
  j.degree = degree;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) j.phi[i] = j.phi[i] + m[i][k] * Poly3::variable(k);
  return j;
}

PolyJet3 PolyJet3::diagonal(const Rational& a, const Rational& b, const Rational& c, int degree) {
  Matrix3 m{};
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return linear(m, degree);
}

Matrix3 PolyJet3::linear_part() const {
  Matrix3 m{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      Exponent e{0, 0, 0};
      e[k] = 1;
      m[i][k] = phi[i].coeff(e);
    }
  return m;
}

bool PolyJet3::fixes_origin() const {
  for (const auto& p : phi)
    if (sgn(p.coeff({0, 0, 0})) != 0) return false;
  return true;
}

Rational PolyJet3::partial_at_zero(int i, const Exponent& e) const {
  Rational f = 1;
  for (int k = 0; k < 3; ++k)
    for (int n = 2; n <= e[k]; ++n) f *= n;
  return f * phi[i].coeff(e);
}

Rational det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse3(const Matrix3& m) {
  Rational d = det3(m);
  if (sgn(d) == 0) fail(error_kind::domain, "singular linear part");
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / d;
    }
  return r;
}

namespace {

// Substitution of g into polynomials, with power caches shared across
// the three components of f.
class Substituter {
 public:
  Substituter(const PolyJet3& g, int d) : g_(g), d_(d) { cache_[{0, 0, 0}] = Poly3::monomial({0, 0, 0}); }
  // g^e truncated at degree d; each monomial costs one product with a component of g.
  const Poly3& value(const Exponent& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    int k = e[0] > 0 ? 0 : e[1] > 0 ? 1 : 2;
    Exponent lower = e;
    lower[k]--;
    Poly3 v = mul_trunc(value(lower), g_.phi[k], d_);
    return cache_.emplace(e, std::move(v)).first->second;
  }
  Poly3 apply(const Poly3& f) {
    Poly3 r;
    for (const auto& [e, c] : f.terms()) {
      if (total_degree(e) > d_) continue;
      for (const auto& [me, mc] : value(e).terms()) r.add(me, c * mc);
    }
    return r;
  }

 private:
  const PolyJet3& g_;
  int d_;
  std::map<Exponent, Poly3> cache_;
};

}  // namespace

PolyJet3 jet_compose(const PolyJet3& f, const PolyJet3& g) {
  if (!g.fixes_origin()) fail(error_kind::domain, "jet_compose needs an inner jet fixing the origin");
  int d = std::min(f.degree, g.degree);
  PolyJet3 r;
  r.degree = d;
  Substituter s(g, d);
  for (int i = 0; i < 3; ++i) r.phi[i] = s.apply(f.phi[i]);
  return r;
}

CurveGerm jet_eval_on_curve(const PolyJet3& f, const CurveGerm& c) {
  MonomialEvaluator ev(c);
  return CurveGerm(ev.eval(f.phi[0]), ev.eval(f.phi[1]), ev.eval(f.phi[2]));
}

PolyJet3 jet_inverse(const PolyJet3& f) {
  if (!f.fixes_origin()) fail(error_kind::domain, "jet_inverse needs a jet fixing the origin");
  int d = f.degree;
  Matrix3 li = inverse3(f.linear_part());
  PolyJet3 lin_inv = PolyJet3::linear(li, d);
  PolyJet3 nonlin;
  nonlin.degree = d;
  for (int i = 0; i < 3; ++i) {
    nonlin.phi[i] = f.phi[i];
    for (int k = 0; k < 3; ++k) {
      Exponent e{0, 0, 0};
      e[k] = 1;
      nonlin.phi[i].add(e, -f.phi[i].coeff(e));
    }
  }
  // psi = L^-1 (id - N o psi); pass p makes psi exact through degree p + 1.
  PolyJet3 psi = lin_inv;
  for (int pass = 1; pass < d; ++pass) {
    nonlin.degree = pass + 1;
    psi.degree = pass + 1;
    PolyJet3 npsi = jet_compose(nonlin, psi);
    PolyJet3 rhs = PolyJet3::identity(pass + 1);
    for (int i = 0; i < 3; ++i) rhs.phi[i] = rhs.phi[i] - npsi.phi[i];
    lin_inv.degree = pass + 1;
    psi = jet_compose(lin_inv, rhs);
  }
  psi.degree = d;
  return psi;
}

}  // namespace mt
