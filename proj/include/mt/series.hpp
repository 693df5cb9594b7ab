#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mt/rational.hpp"

namespace mt {

// Univariate power series known exactly through degree trunc(); higher
// degrees are unknown, not zero.
class TruncSeries {
 public:
  explicit TruncSeries(int trunc = 0);
  TruncSeries(const std::vector<std::pair<int, Rational>>& terms, int trunc);

  static TruncSeries monomial(const Rational& c, int deg, int trunc);
  static TruncSeries constant(const Rational& c, int trunc) { return monomial(c, 0, trunc); }
  static TruncSeries variable(int trunc) { return monomial(1, 1, trunc); }

  int trunc() const { return static_cast<int>(c_.size()) - 1; }
  // Throws insufficient_truncation when d > trunc().
  const Rational& operator[](int d) const;
  Rational coeff_or_zero(int d) const;

  // nullopt means zero up to trunc.
  std::optional<int> ord() const;
  // ord(), or trunc()+1 when zero up to trunc.
  int valuation() const;
  bool is_zero() const { return !ord().has_value(); }

  // Nonzero terms in increasing degree.
  std::vector<std::pair<int, Rational>> terms() const;
  std::size_t term_count() const;

  TruncSeries truncated(int n) const;
  Rational eval_zero() const { return (*this)[0]; }

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }
  // Equal through degree n, both sides known through n.
  bool agrees(const TruncSeries& o, int n) const;

  std::string to_string(const std::string& var = "t") const;

  // Raw dense coefficient access, degrees 0..trunc().
  const std::vector<Rational>& dense() const { return c_; }
  static TruncSeries from_dense(std::vector<Rational> c);

 private:
  std::vector<Rational> c_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a);
TruncSeries operator*(const Rational& k, const TruncSeries& a);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_pow(const TruncSeries& a, int n);
TruncSeries derivative(const TruncSeries& a);
// Antiderivative with the given constant term.
TruncSeries integral(const TruncSeries& a, const Rational& c0 = 0);
// a / t^r; requires the first r coefficients to vanish.
TruncSeries shift_down(const TruncSeries& a, int r);
// a * t^r.
TruncSeries shift_up(const TruncSeries& a, int r);
// Multiplicative inverse of a series with nonzero constant term.
TruncSeries series_inverse(const TruncSeries& a);
// a / b after cancelling t^ord(b); requires ord(a) >= ord(b).
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner);
// s^alpha for s = 1 + O(t).
TruncSeries series_unit_power(const TruncSeries& s, const Rational& alpha);
TruncSeries series_unit_root(const TruncSeries& s, int m);
TruncSeries param_inverse(const TruncSeries& s);

}  // namespace mt
