#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mt/curve.hpp"
#include "mt/invariants.hpp"
#include "mt/jet.hpp"

namespace mt {

struct TraceStep {
  enum class Kind { reparametrize, coordinate_change, scale };
  Kind kind = Kind::scale;
  TruncSeries series;             // reparametrize: c -> c o series
  PolyJet3 jet;                   // coordinate_change: c -> jet o c
  std::array<Rational, 3> factors{1, 1, 1};  // scale
  std::string note;
  CurveGerm before{TruncSeries(0), TruncSeries(0), TruncSeries(0)};
  CurveGerm after{TruncSeries(0), TruncSeries(0), TruncSeries(0)};

  static std::string kind_name(Kind k);
};

struct ReductionTrace {
  std::vector<TraceStep> steps;

  bool empty() const { return steps.empty(); }
  void append(const ReductionTrace& o) { steps.insert(steps.end(), o.steps.begin(), o.steps.end()); }
};

CurveGerm apply_step(const TraceStep& s, const CurveGerm& c);
// Re-executes every step from input, checking each snapshot; returns the final curve.
CurveGerm replay(const ReductionTrace& t, const CurveGerm& input);

struct Reduction {
  CurveGerm curve{TruncSeries(0), TruncSeries(0), TruncSeries(0)};
  ReductionTrace trace;
  // Terms that could not be removed, or why a step did not apply.
  std::vector<std::string> notes;
};

// Linear change making component orders strictly increasing (zero components last).
Reduction linear_normalize(const CurveGerm& c);
Reduction monomialize_first(const CurveGerm& c);
Reduction kill_semigroup_terms(const CurveGerm& c, const Semigroup& s);
Reduction scale_normalize(const CurveGerm& c);

struct ZariskiResult : Reduction {
  enum class Status { applied, not_applicable, unchanged } status = Status::unchanged;
  // Exponent of the removed term.
  int nu = 0;
};

// Removes the smallest gap-exponent term of y (then z) by x -> x + a W and re-monomializing x.
ZariskiResult zariski_step(const CurveGerm& c);

// monomialize -> zariski -> kill-terms -> scale until stable.
Reduction reduce_pipeline(const CurveGerm& c);

struct CatalogRow {
  std::string code;
  std::vector<CurveGerm> normal_forms;
};

// Normal forms of the classes at levels 1-3.
std::vector<CatalogRow> table2(int trunc = 64);

struct CatalogReduction {
  std::string code;
  CurveGerm normal_form;
  ReductionTrace trace;
};

CatalogReduction reduce_catalog(const CurveGerm& c);

struct Certificate {
  PolyJet3 phi;
  TruncSeries tau;
};

CurveGerm apply_certificate(const Certificate& cert, const CurveGerm& c);
// (Phi, tau) with trace output = Phi o input o tau.
Certificate trace_certificate(const ReductionTrace& t, int degree, int trunc);

struct EquivalenceBudget {
  int trunc = 32;
  // 0 picks trunc / multiplicity, the degree that controls every coefficient through trunc.
  int jet_degree = 0;
};

struct EquivalenceResult {
  enum class Kind { certificate, separated, unknown } kind = Kind::unknown;
  std::optional<Certificate> cert;
  std::string invariant;
  std::string value1, value2;
  std::string detail;
  int verified_trunc = 0;
  std::string kind_name() const;
};

EquivalenceResult equivalence_search(const CurveGerm& c1, const CurveGerm& c2, const EquivalenceBudget& budget = {});

}  // namespace mt
