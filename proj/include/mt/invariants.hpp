#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mt/curve.hpp"

namespace mt {

constexpr int default_semigroup_bound = 24;
constexpr int default_planarity_degree = 7;
constexpr int default_planarity_order = 40;

int multiplicity(const CurveGerm& c);
bool well_parameterized(const CurveGerm& c);

// Echelon basis of the values {P o c mod t^(bound+1)}, P ranging over
// polynomials without constant term and without the excluded monomials.
class ValueEchelon {
 public:
  ValueEchelon(const CurveGerm& c, int bound, const std::vector<Exponent>& excluded = {});

  int bound() const { return bound_; }
  std::vector<int> orders() const;
  bool has(int order) const;
  // P with P o c = t^order + O(t^(order+1)).
  std::optional<Poly3> witness(int order) const;

 private:
  int bound_;
  std::vector<std::vector<Rational>> rows_;  // indexed by pivot order; empty if none
  std::vector<Poly3> polys_;
};

struct Semigroup {
  std::vector<int> elements;
  std::vector<int> gaps;
  int bound = 0;
  std::optional<int> conductor;
  // One witness per element: P with ord(P o c) = element.
  std::vector<std::pair<int, Poly3>> witnesses;

  // Membership above bound is only decided when a conductor is certified.
  std::optional<bool> member(int n) const;
  bool operator==(const Semigroup& o) const {
    return elements == o.elements && gaps == o.gaps && bound == o.bound && conductor == o.conductor;
  }
};

Semigroup semigroup(const CurveGerm& c, int bound = default_semigroup_bound);

struct ArnoldSymbol {
  enum class Shape { planar, space, mixed } shape;  // [m,n], [m,n,p], [m,(n,p)]
  int m = 0, n = 0, p = 0;
  std::string str() const;
  bool operator==(const ArnoldSymbol& o) const = default;
};

ArnoldSymbol arnold_symbol(const CurveGerm& c);

struct PlanarityVerdict {
  enum class Kind { planar, obstructed, undetermined } kind;
  int degree_bound = 0;
  int order_bound = 0;
  Poly3 witness;  // planar only: df(0) != 0 and ord(f o c) > order_bound
  std::string reason;
  std::string kind_name() const;
};

PlanarityVerdict planarity(const CurveGerm& c, int degree_bound = default_planarity_degree,
                           int order_bound = default_planarity_order);

}  // namespace mt
