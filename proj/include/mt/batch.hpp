#pragma once

#include <vector>

#include "mt/curve.hpp"
#include "mt/diffeo.hpp"
#include "mt/invariants.hpp"
#include "mt/tower.hpp"

namespace mt {

// serial is the reference; parallel uses OpenMP and must agree element for element.
enum class Exec { serial, parallel };

// Errors are rethrown after the loop, lowest index first, so both modes fail identically.
std::vector<Semigroup> batch_semigroups(const std::vector<CurveGerm>& curves, int bound, Exec exec = Exec::parallel);
std::vector<RVTWord> batch_rvt_codes(const std::vector<CurveGerm>& curves, int level, Exec exec = Exec::parallel);
std::vector<TowerPoint> batch_prolong_apply(const std::vector<DiffeoJet>& jets, const TowerPoint& p,
                                            Exec exec = Exec::parallel);
std::vector<PlanarityVerdict> batch_planarity(const std::vector<CurveGerm>& curves, int degree_bound, int order_bound,
                                              Exec exec = Exec::parallel);

}  // namespace mt
