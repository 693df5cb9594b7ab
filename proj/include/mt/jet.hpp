#pragma once

#include <array>

#include "mt/curve.hpp"

namespace mt {

constexpr int default_jet_degree = 8;

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

// Polynomial map (phi1, phi2, phi3) of 3-space truncated at total degree D.
struct PolyJet3 {
  int degree = default_jet_degree;
  std::array<Poly3, 3> phi;

  static PolyJet3 identity(int degree = default_jet_degree);
  static PolyJet3 linear(const Matrix3& m, int degree = default_jet_degree);
  static PolyJet3 diagonal(const Rational& a, const Rational& b, const Rational& c,
                           int degree = default_jet_degree);

  // Row i holds d(phi_i)/d(x, y, z) at 0.
  Matrix3 linear_part() const;
  bool fixes_origin() const;
  // d^e phi_i / dx^e0 dy^e1 dz^e2 at 0.
  Rational partial_at_zero(int i, const Exponent& e) const;
  bool operator==(const PolyJet3& o) const { return degree == o.degree && phi == o.phi; }
};

Rational det3(const Matrix3& m);
Matrix3 inverse3(const Matrix3& m);

// f o g, truncated at min(f.degree, g.degree).
PolyJet3 jet_compose(const PolyJet3& f, const PolyJet3& g);
CurveGerm jet_eval_on_curve(const PolyJet3& f, const CurveGerm& c);
// Compositional inverse through degree f.degree; needs an invertible linear part.
PolyJet3 jet_inverse(const PolyJet3& f);

}  // namespace mt
