#pragma once

#include <array>
#include <string>
#include <vector>

#include "mt/curve.hpp"

namespace mt {

enum class Letter { R, V, T, L, T1, T2, L1, L2, L3 };

std::string letter_name(Letter l);
Letter parse_letter(const std::string& s);

struct RVTWord {
  std::vector<Letter> letters;

  static RVTWord parse(const std::string& s);
  std::string str() const;
  std::size_t size() const { return letters.size(); }
  Letter back() const { return letters.back(); }
  bool operator==(const RVTWord& o) const { return letters == o.letters; }
  bool operator<(const RVTWord& o) const { return letters < o.letters; }
};

// A direction in Delta_k written in the chart frame (Z_k, d/du_k, d/dv_k).
using Direction = std::array<Rational, 3>;

// Priority chart for a direction: first nonzero component.
int chart_for(const Direction& l);
// Scales so the chart component is 1.
Direction normalized(const Direction& l);
// Indices other than d, increasing.
std::array<int, 2> others(int d);

struct CriticalHyperplane {
  int birth = 0;
  int age = 0;
  Direction normal{};

  bool contains(const Direction& l) const;
  bool is_vertical() const { return age == 0; }
  std::string name() const;
  bool operator==(const CriticalHyperplane& o) const {
    return birth == o.birth && age == o.age && normal == o.normal;
  }
};

class TowerPoint {
 public:
  TowerPoint();
  TowerPoint(std::vector<int> chart, std::vector<Rational> coords);

  int level() const { return static_cast<int>(chart_.size()); }
  const std::vector<int>& chart() const { return chart_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const std::vector<CriticalHyperplane>& arrangement() const { return arr_.back(); }
  const std::vector<CriticalHyperplane>& arrangement_at_level(int j) const { return arr_[j]; }
  // Letters of the point's own directions l_0 .. l_{k-1}.
  const RVTWord& code() const { return code_; }
  // The level-j direction l_j (j < level) determining the level-(j+1) point.
  Direction direction(int j) const;
  // Coordinate indices of the level-j triple (w_j, u_j, v_j).
  std::array<int, 3> triple_indices(int j) const;

  bool operator==(const TowerPoint& o) const { return chart_ == o.chart_ && coords_ == o.coords_; }
  bool operator!=(const TowerPoint& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  std::vector<int> chart_;
  std::vector<Rational> coords_;
  std::vector<std::vector<CriticalHyperplane>> arr_;
  RVTWord code_;
};

// The point (p, l) one level up.
TowerPoint extend_point(const TowerPoint& p, const Direction& l);
TowerPoint project_point(const TowerPoint& p, int i);

Letter classify_in(const std::vector<CriticalHyperplane>& arrangement, const Direction& l);
Letter classify_direction(const TowerPoint& p, const Direction& l);
// Frame functional of the prolongation of delta through q = (p, l).
CriticalHyperplane prolong_hyperplane(const CriticalHyperplane& delta, const Direction& l, const TowerPoint& q);
std::vector<CriticalHyperplane> arrangement_at(const TowerPoint& p);

// Frame vectors (Z_k, d/du_k, d/dv_k) at p in ambient coordinates.
std::array<std::vector<Rational>, 3> ambient_frame(const TowerPoint& p);
// Ambient vectors spanning the kernel of a hyperplane at p.
std::array<std::vector<Rational>, 2> ambient_span(const TowerPoint& p, const CriticalHyperplane& h);

struct Prolongation {
  // 3 + 2k coordinate series (x, y, z, u1, v1, ...).
  std::vector<TruncSeries> coords;
  std::vector<int> chart;
  // Order of the derivative triple used at each level.
  std::vector<int> orders;

  int level() const { return static_cast<int>(chart.size()); }
  std::array<TruncSeries, 3> triple(int j) const;
  TowerPoint point() const;
  // Direction of the level-k triple at t = 0 (unnormalized leading vector).
  Direction top_direction() const;
};

Prolongation prolong_curve(const CurveGerm& c, int k);
RVTWord rvt_code(const CurveGerm& c, int k);

// Regular curve through p with top fiber coordinates u_k(p) + u_tail, v_k(p) + v_tail.
CurveGerm realize_point(const TowerPoint& p, int trunc = 16);
CurveGerm realize_point_with(const TowerPoint& p, const TruncSeries& u_tail, const TruncSeries& v_tail);
// Base curve of the integral curve whose level-k triple is given.
CurveGerm lift_from_level(const TowerPoint& p, const std::array<TruncSeries, 3>& top);

}  // namespace mt
