#include "mt/diffeo.hpp"

#include "mt/error.hpp"

namespace mt {

namespace {

constexpr int initial_trunc = 16;
constexpr int max_trunc = 512;

}  // namespace

DiffeoJet::DiffeoJet(PolyJet3 jet) : jet_(std::move(jet)) {
  if (!jet_.fixes_origin()) fail(error_kind::domain, "diffeomorphism jet must fix the origin");
  if (sgn(det3(jet_.linear_part())) == 0) fail(error_kind::domain, "diffeomorphism jet has a singular linear part");
}

DiffeoJet DiffeoJet::identity(int degree) { return DiffeoJet(PolyJet3::identity(degree)); }

DiffeoJet compose(const DiffeoJet& f, const DiffeoJet& g) { return DiffeoJet(jet_compose(f.jet(), g.jet())); }

DiffeoJet inverse(const DiffeoJet& f) { return DiffeoJet(jet_inverse(f.jet())); }

TowerPoint prolong_apply_through(const DiffeoJet& phi, const TowerPoint& p,
                                 const std::vector<std::pair<int, Rational>>& u_tail,
                                 const std::vector<std::pair<int, Rational>>& v_tail) {
  int k = p.level();
  if (k == 0) return p;
  for (int n = initial_trunc; n <= max_trunc; n *= 2) {
    try {
      CurveGerm g = realize_point_with(p, TruncSeries(u_tail, n), TruncSeries(v_tail, n));
      return prolong_curve(jet_eval_on_curve(phi.jet(), g), k).point();
    } catch (const Error& e) {
      if (e.kind() != error_kind::insufficient_truncation) throw;
    }
  }
  fail(error_kind::insufficient_truncation, "prolong_apply did not stabilize up to trunc " + std::to_string(max_trunc));
}

TowerPoint prolong_apply(const DiffeoJet& phi, const TowerPoint& p) {
  int k = p.level();
  if (k == 0) return p;
  for (int n = initial_trunc; n <= max_trunc; n *= 2) {
    try {
      return prolong_curve(jet_eval_on_curve(phi.jet(), realize_point(p, n)), k).point();
    } catch (const Error& e) {
      if (e.kind() != error_kind::insufficient_truncation) throw;
    }
  }
  fail(error_kind::insufficient_truncation, "prolong_apply did not stabilize up to trunc " + std::to_string(max_trunc));
}

bool isotropy_check(const DiffeoJet& phi, const TowerPoint& p) { return prolong_apply(phi, p) == p; }

std::vector<Direction> fiber_action(const DiffeoJet& phi, const TowerPoint& p, const std::vector<Direction>& dirs) {
  std::vector<Direction> out;
  for (const auto& l : dirs) {
    TowerPoint img = prolong_apply(phi, extend_point(p, l));
    if (project_point(img, p.level()) != p) fail(error_kind::domain, "jet does not fix the base point");
    out.push_back(img.direction(p.level()));
  }
  return out;
}

std::string TaylorConstraint::name() const {
  static const char* v = "xyz";
  std::string s = "phi" + std::to_string(component + 1) + "_";
  for (int i = 0; i < 3; ++i) s += std::string(partial[i], v[i]);
  return s + "(0)=0";
}

bool IsotropyConstraintSet::satisfied_by(const PolyJet3& j) const {
  for (const auto& c : constraints)
    if (sgn(j.partial_at_zero(c.component, c.partial)) != 0) return false;
  return true;
}

IsotropyConstraintSet taylor_constraints(IsotropyStage stage) {
  IsotropyConstraintSet s{stage, {{1, {1, 0, 0}}, {2, {1, 0, 0}}}};
  if (stage == IsotropyStage::G1) return s;
  s.constraints.push_back({2, {0, 1, 0}});
  if (stage == IsotropyStage::G2) return s;
  s.constraints.push_back({2, {2, 0, 0}});
  return s;
}

TowerPoint chain_representative(IsotropyStage stage) {
  std::vector<int> chart{0};
  if (stage != IsotropyStage::G1) chart.push_back(1);
  if (stage == IsotropyStage::G3) chart.push_back(1);
  return TowerPoint(chart, std::vector<Rational>(3 + 2 * chart.size()));
}

DiffeoJet sample_jet(std::mt19937_64& rng, const IsotropyConstraintSet* constraints, const JetSampler& opts) {
  std::uniform_int_distribution<int> num(-opts.max_num, opts.max_num), den(1, opts.max_den);
  std::bernoulli_distribution keep(opts.density);
  auto coeff = [&]() {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  PolyJet3 j;
  j.degree = opts.degree;
  for (int i = 0; i < 3; ++i)
    for (int d = 1; d <= opts.degree; ++d)
      for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
          Exponent e{a, b, d - a - b};
          bool linear = d == 1;
          Rational q = coeff();
          if (linear || keep(rng)) j.phi[i].add(e, q);
        }
  if (constraints)
    for (const auto& c : constraints->constraints) j.phi[c.component].add(c.partial, -j.phi[c.component].coeff(c.partial));
  // Constrained linear entries are off-diagonal, so diagonal shifts keep them.
  while (sgn(det3(j.linear_part())) == 0)
    for (int i = 0; i < 3; ++i) {
      Exponent e{0, 0, 0};
      e[i] = 1;
      j.phi[i].add(e, 1);
    }
  return DiffeoJet(std::move(j));
}

Direction sample_direction(std::mt19937_64& rng, const TowerPoint& p) {
  std::uniform_int_distribution<int> n(-3, 3);
  for (;;) {
    Direction l{Rational(n(rng)), Rational(n(rng)), Rational(n(rng))};
    const auto& arr = p.arrangement();
    if (!arr.empty() && std::bernoulli_distribution(0.5)(rng)) {
      int picks = std::uniform_int_distribution<int>(1, 2)(rng);
      for (int s = 0; s < picks; ++s) {
        const auto& h = arr[std::uniform_int_distribution<int>(0, arr.size() - 1)(rng)];
        for (int i = 0; i < 3; ++i)
          if (sgn(h.normal[i]) != 0) l[i] = 0;
      }
    }
    if (sgn(l[0]) != 0 || sgn(l[1]) != 0 || sgn(l[2]) != 0) return l;
  }
}

TowerPoint sample_point(std::mt19937_64& rng, int level) {
  TowerPoint p;
  for (int j = 0; j < level; ++j) p = extend_point(p, j == 0 ? Direction{1, 0, 0} : sample_direction(rng, p));
  return p;
}

}  // namespace mt
