#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "mt/acceptance.hpp"
#include "mt/census.hpp"
#include "mt/error.hpp"
#include "mt/invariants.hpp"
#include "mt/io.hpp"
#include "mt/normalize.hpp"
#include "mt/tower.hpp"

using namespace mt;
using io::Json;

namespace {

struct Options {
  int trunc = 64;
  std::uint64_t seed = 0;
  bool table = false;
  std::optional<int> bound;
  int degree = default_planarity_degree;
  int level = 1;
  std::string curve, curve2, point, diffeo, trace, suite;
  int jet_degree = 0;
};

CurveGerm load_curve(const std::string& path, const Options& o) {
  CurveGerm c = io::curve_from(io::read_file(path));
  return c.trunc() > o.trunc ? c.truncated(o.trunc) : c;
}

std::string table_point(const TowerPoint& p) {
  std::ostringstream os;
  os << "level " << p.level() << "  code " << p.code().str() << "\nchart";
  for (int c : p.chart()) os << ' ' << c;
  os << "\ncoords";
  for (const auto& q : p.coords()) os << ' ' << format_rational(q);
  return os.str() + "\n";
}

std::string census_table(const Census& c) {
  std::ostringstream os;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s += std::string(w - s.size(), ' ');
    return s;
  };
  os << pad("code", 8) << pad("orbits", 8) << pad("tier", 18) << "normal forms\n";
  for (const auto& r : c.records) {
    std::string forms;
    for (const auto& g : r.curves) {
      std::string s = g.to_string();
      forms += (forms.empty() ? "" : ", ") + s;
    }
    if (forms.empty()) forms = "-";
    os << pad(r.code.str(), 8) << pad(std::to_string(r.orbit_count), 8) << pad(ClassRecord::tier_name(r.tier), 18)
       << forms << "\n";
  }
  os << "total " << c.total << "\n";
  return os.str();
}

// Returns the output document; throws mt::Error on domain failures.
std::string run_verb(const std::string& verb, const Options& o, int& status) {
  auto out = [&](const Json& j, const std::string& table) { return o.table ? table : io::dump(j); };
  if (verb == "prolong") {
    Prolongation p = prolong_curve(load_curve(o.curve, o), o.level);
    return out(io::prolongation_json(p), table_point(p.point()));
  }
  if (verb == "rvt") {
    std::string code = rvt_code(load_curve(o.curve, o), o.level).str();
    return out(Json(code), code + "\n");
  }
  if (verb == "semigroup") {
    CurveGerm c = load_curve(o.curve, o);
    Semigroup s = semigroup(c, o.bound.value_or(std::min(c.trunc(), default_semigroup_bound)));
    Json j = io::semigroup_json(s);
    std::ostringstream t;
    t << "bound " << s.bound << "\ngaps";
    for (int g : s.gaps) t << ' ' << g;
    t << "\nconductor " << (s.conductor ? std::to_string(*s.conductor) : "undetected") << "\n";
    return out(j, t.str());
  }
  if (verb == "planar") {
    CurveGerm c = load_curve(o.curve, o);
    PlanarityVerdict v = planarity(c, o.degree, o.bound.value_or(std::min(c.trunc(), default_planarity_order)));
    std::string t = v.kind_name() + (v.kind == PlanarityVerdict::Kind::planar ? " " + v.witness.to_string() : "") + "\n";
    return out(io::planarity_json(v), t);
  }
  if (verb == "reduce") {
    CatalogReduction r = reduce_catalog(load_curve(o.curve, o));
    Json j{{"code", r.code}, {"normal_form", io::curve_json(r.normal_form)}, {"trace", io::trace_json(r.trace)}};
    return out(j, r.code + " " + r.normal_form.to_string() + " (" + std::to_string(r.trace.steps.size()) + " steps)\n");
  }
  if (verb == "equiv") {
    EquivalenceBudget b;
    b.trunc = std::min(o.trunc, 32);
    if (o.bound) b.trunc = *o.bound;
    b.jet_degree = o.jet_degree;
    EquivalenceResult r = equivalence_search(load_curve(o.curve, o), load_curve(o.curve2, o), b);
    std::string t = r.kind_name();
    if (r.kind == EquivalenceResult::Kind::separated) t += " by " + r.invariant + ": " + r.value1 + " vs " + r.value2;
    if (!r.detail.empty()) t += " (" + r.detail + ")";
    return out(io::equivalence_json(r), t + "\n");
  }
  if (verb == "classes") {
    Json a = Json::array();
    std::string t;
    for (const auto& w : enumerate_classes(o.level)) {
      a.push_back(w.str());
      t += w.str() + "\n";
    }
    return out(a, t);
  }
  if (verb == "census") {
    Census c = orbit_census(o.level);
    return out(io::census_json(c), census_table(c));
  }
  if (verb == "apply") {
    PolyJet3 phi = io::jet_from(io::read_file(o.diffeo));
    DiffeoJet f(phi);
    if (!o.point.empty()) {
      TowerPoint p = prolong_apply(f, io::point_from(io::read_file(o.point)));
      return out(io::point_json(p), table_point(p));
    }
    CurveGerm c = jet_eval_on_curve(f.jet(), load_curve(o.curve, o));
    return out(io::curve_json(c), c.to_string() + "\n");
  }
  if (verb == "replay") {
    ReductionTrace t = io::trace_from(io::read_file(o.trace));
    CurveGerm c = replay(t, load_curve(o.curve, o));
    return out(io::curve_json(c), c.to_string() + "\n");
  }
  if (verb == "verify") {
    if (o.suite != "paper") fail(error_kind::domain, "unknown suite \"" + o.suite + "\"");
    auto results = run_acceptance(o.seed);
    Json a = Json::array();
    std::string t;
    int failed = 0;
    for (const auto& r : results) {
      a.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      t += format_criterion(r) + "\n";
      failed += !r.pass;
    }
    t += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " criteria pass\n";
    if (failed) status = 1;
    return out(Json{{"suite", "paper"}, {"criteria", a}, {"passed", results.size() - failed}}, t);
  }
  throw CLI::ValidationError("unknown verb " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("MT_TRUNC")) {
    try {
      o.trunc = std::stoi(env);
    } catch (...) {
      std::cerr << "MT_TRUNC must be an integer\n";
      return 2;
    }
  }
  CLI::App app{"Exact prolongation and classification of curve germs in the n=2 Monster tower"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--trunc", o.trunc, "global truncation (default 64, env MT_TRUNC)")->check(CLI::Range(1, 4096));
  app.add_option("--seed", o.seed, "seed for sampled jets");
  app.add_flag("--table", o.table, "plain-text table instead of JSON");

  auto curve_opt = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--curve", o.curve, "curve file")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto* prolong = app.add_subcommand("prolong", "prolong a curve to a level");
  curve_opt(prolong);
  prolong->add_option("--level", o.level)->required()->check(CLI::Range(1, 64));
  auto* rvt = app.add_subcommand("rvt", "RVT code of a curve");
  curve_opt(rvt);
  rvt->add_option("--level", o.level)->required()->check(CLI::Range(1, 64));
  auto* sg = app.add_subcommand("semigroup", "semigroup of a curve up to a bound");
  curve_opt(sg);
  sg->add_option("--bound", o.bound)->check(CLI::Range(1, 4096));
  auto* pl = app.add_subcommand("planar", "planarity verdict");
  curve_opt(pl);
  pl->add_option("--bound", o.bound, "order bound")->check(CLI::Range(1, 4096));
  pl->add_option("--degree", o.degree, "degree bound")->check(CLI::Range(1, 32));
  auto* red = app.add_subcommand("reduce", "reduce to a catalog normal form");
  curve_opt(red);
  auto* eq = app.add_subcommand("equiv", "equivalence certificate or separating invariant");
  curve_opt(eq);
  eq->add_option("--target", o.curve2, "second curve file")->required()->check(CLI::ExistingFile);
  eq->add_option("--bound", o.bound, "verification truncation (default 32)")->check(CLI::Range(1, 4096));
  eq->add_option("--jet-degree", o.jet_degree)->check(CLI::Range(0, 64));
  auto* cl = app.add_subcommand("classes", "RVT classes at a level");
  cl->add_option("--level", o.level)->required()->check(CLI::Range(1, 4));
  auto* ce = app.add_subcommand("census", "orbit census at a level");
  ce->add_option("--level", o.level)->required()->check(CLI::Range(1, 4));
  auto* ap = app.add_subcommand("apply", "apply a diffeomorphism jet to a point or curve");
  ap->add_option("--diffeo", o.diffeo)->required()->check(CLI::ExistingFile);
  auto* ap_point = ap->add_option("--point", o.point)->check(CLI::ExistingFile);
  auto* ap_curve = ap->add_option("--curve", o.curve)->check(CLI::ExistingFile);
  ap_point->excludes(ap_curve);
  auto* rp = app.add_subcommand("replay", "re-execute a reduction trace");
  rp->add_option("--trace", o.trace)->required()->check(CLI::ExistingFile);
  curve_opt(rp);
  auto* ve = app.add_subcommand("verify", "run an acceptance suite");
  ve->add_option("--suite", o.suite)->required();

  try {
    app.parse(argc, argv);
    if (ap->parsed() && o.point.empty() && o.curve.empty())
      throw CLI::RequiredError("apply needs --point or --curve");
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  int status = 0;
  try {
    std::cout << run_verb(verb, o, status);
  } catch (const Error& e) {
    std::cout << io::dump(io::error_json(e));
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return status;
}
