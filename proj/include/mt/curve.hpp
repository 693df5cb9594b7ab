#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mt/series.hpp"

namespace mt {

// Germ t -> (x(t), y(t), z(t)) with c(0) = 0.
class CurveGerm {
 public:
  CurveGerm(TruncSeries x, TruncSeries y, TruncSeries z);
  // Monomial-sum shorthand: each component as (coefficient, degree) pairs.
  static CurveGerm from_terms(const std::vector<std::pair<int, Rational>>& x,
                              const std::vector<std::pair<int, Rational>>& y,
                              const std::vector<std::pair<int, Rational>>& z, int trunc);

  const TruncSeries& operator[](int i) const { return c_[i]; }
  const TruncSeries& x() const { return c_[0]; }
  const TruncSeries& y() const { return c_[1]; }
  const TruncSeries& z() const { return c_[2]; }
  const std::array<TruncSeries, 3>& components() const { return c_; }

  // Smallest component truncation.
  int trunc() const;
  CurveGerm truncated(int n) const;
  bool operator==(const CurveGerm& o) const { return c_ == o.c_; }
  bool agrees(const CurveGerm& o, int n) const;
  std::string to_string() const;

 private:
  std::array<TruncSeries, 3> c_;
};

CurveGerm reparametrize(const CurveGerm& c, const TruncSeries& tau);
CurveGerm scale(const CurveGerm& c, const std::array<Rational, 3>& f);

using Exponent = std::array<int, 3>;

// Polynomial in x, y, z with exact coefficients; zero terms are never stored.
class Poly3 {
 public:
  Poly3() = default;
  static Poly3 variable(int i);
  static Poly3 monomial(const Exponent& e, const Rational& c = 1);

  void add(const Exponent& e, const Rational& c);
  Rational coeff(const Exponent& e) const;
  const std::map<Exponent, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  int min_degree() const;
  Poly3 truncated(int d) const;
  Poly3 homogeneous_part(int d) const;
  bool operator==(const Poly3& o) const { return t_ == o.t_; }
  std::string to_string() const;

 private:
  std::map<Exponent, Rational> t_;
};

Poly3 operator+(const Poly3& a, const Poly3& b);
Poly3 operator-(const Poly3& a, const Poly3& b);
Poly3 operator*(const Rational& k, const Poly3& a);
// Product with monomials above total degree d dropped.
Poly3 mul_trunc(const Poly3& a, const Poly3& b, int d);

int total_degree(const Exponent& e);

// Caches component powers of one curve to evaluate many monomials.
class MonomialEvaluator {
 public:
  explicit MonomialEvaluator(const CurveGerm& c);
  const TruncSeries& power(int comp, int k);
  TruncSeries monomial(const Exponent& e);
  TruncSeries eval(const Poly3& p);
  const CurveGerm& curve() const { return c_; }

 private:
  CurveGerm c_;
  std::array<std::vector<TruncSeries>, 3> pw_;
};

TruncSeries poly_eval_on_curve(const Poly3& p, const CurveGerm& c);

}  // namespace mt
