#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mt/jet.hpp"
#include "mt/tower.hpp"

namespace mt {

// Jet of a diffeomorphism germ of 3-space fixing the origin.
class DiffeoJet {
 public:
  explicit DiffeoJet(PolyJet3 jet);
  static DiffeoJet identity(int degree = default_jet_degree);

  const PolyJet3& jet() const { return jet_; }
  Matrix3 linear_part() const { return jet_.linear_part(); }
  bool operator==(const DiffeoJet& o) const { return jet_ == o.jet_; }

 private:
  PolyJet3 jet_;
};

DiffeoJet compose(const DiffeoJet& f, const DiffeoJet& g);
DiffeoJet inverse(const DiffeoJet& f);

// Image of p under the k-th prolongation, through a realizing curve.
TowerPoint prolong_apply(const DiffeoJet& phi, const TowerPoint& p);
// Same, through the realizing curve with the given top fiber tails (polynomials vanishing at 0).
TowerPoint prolong_apply_through(const DiffeoJet& phi, const TowerPoint& p,
                                 const std::vector<std::pair<int, Rational>>& u_tail,
                                 const std::vector<std::pair<int, Rational>>& v_tail);
bool isotropy_check(const DiffeoJet& phi, const TowerPoint& p);
// Normalized image directions in the fiber over p; phi must fix p.
std::vector<Direction> fiber_action(const DiffeoJet& phi, const TowerPoint& p, const std::vector<Direction>& dirs);

enum class IsotropyStage { G1, G2, G3 };

struct TaylorConstraint {
  int component;  // 0, 1, 2 for phi1, phi2, phi3
  Exponent partial;
  std::string name() const;
};

struct IsotropyConstraintSet {
  IsotropyStage stage;
  std::vector<TaylorConstraint> constraints;
  bool satisfied_by(const PolyJet3& j) const;
};

IsotropyConstraintSet taylor_constraints(IsotropyStage stage);
// The all-zero points of the R -> RV -> RVV chain that G1, G2, G3 fix.
TowerPoint chain_representative(IsotropyStage stage);

struct JetSampler {
  int degree = 4;
  int max_num = 5;
  int max_den = 3;
  // Chance that each nonlinear coefficient is nonzero.
  double density = 0.5;
};

// Random jet with small rational coefficients; constrained partials are zero
// and the linear part is pushed off singularity along the diagonal.
DiffeoJet sample_jet(std::mt19937_64& rng, const IsotropyConstraintSet* constraints = nullptr,
                     const JetSampler& opts = {});

// Random direction at p, pushed into critical planes half of the time so every letter shows up.
Direction sample_direction(std::mt19937_64& rng, const TowerPoint& p);
// Origin-based point built from sampled directions.
TowerPoint sample_point(std::mt19937_64& rng, int level);

}  // namespace mt
