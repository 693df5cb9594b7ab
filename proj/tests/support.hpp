#pragma once

#include <random>
#include <vector>

#include "mt/curve.hpp"
#include "mt/jet.hpp"

namespace mt::testing {

inline TruncSeries S(std::vector<std::pair<int, Rational>> terms, int trunc = 32) { return TruncSeries(terms, trunc); }

// Curve from (degree, coefficient) lists.
inline CurveGerm C(std::vector<std::pair<int, Rational>> x, std::vector<std::pair<int, Rational>> y,
                   std::vector<std::pair<int, Rational>> z, int trunc = 32) {
  return CurveGerm::from_terms(x, y, z, trunc);
}

inline Rational small_rational(std::mt19937_64& rng, int num = 5, int den = 3) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

// t * (unit) with random rational coefficients.
inline TruncSeries random_reparam(std::mt19937_64& rng, int trunc, int terms = 4) {
  TruncSeries s = TruncSeries::variable(trunc);
  std::vector<std::pair<int, Rational>> t;
  Rational lead = small_rational(rng);
  if (sgn(lead) == 0) lead = 1;
  t.emplace_back(1, lead);
  for (int i = 2; i < 2 + terms; ++i) t.emplace_back(i, small_rational(rng));
  return TruncSeries(t, trunc);
}

}  // namespace mt::testing

#include <ostream>

#include "mt/diffeo.hpp"
#include "mt/tower.hpp"

namespace mt {
inline std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const CurveGerm& c) { return os << c.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const TowerPoint& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Poly3& p) { return os << p.to_string(); }
}  // namespace mt

namespace mt::testing {

inline Direction random_direction(std::mt19937_64& rng, const TowerPoint& p) { return sample_direction(rng, p); }
inline TowerPoint random_point(std::mt19937_64& rng, int level) { return sample_point(rng, level); }

}  // namespace mt::testing
