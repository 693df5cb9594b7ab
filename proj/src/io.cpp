#include "mt/io.hpp"

#include <fstream>
#include <sstream>

#include "mt/error.hpp"

namespace mt::io {

namespace {

int parse_int(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos || (s.size() > 1 && s[0] == '0'))
    fail(error_kind::parse, "bad " + what + " \"" + s + "\"");
  return std::stoi(s);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(error_kind::parse, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 100000)
    fail(error_kind::parse, std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<int>();
}

Rational rational_from(const Json& v) {
  if (!v.is_string()) fail(error_kind::parse, "rationals are written as strings \"p\" or \"p/q\"");
  return parse_rational(v.get<std::string>());
}

Exponent exponent_from(const std::string& key) {
  Exponent e{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t end = key.find(',', pos);
    if ((i < 2) != (end != std::string::npos)) fail(error_kind::parse, "bad monomial key \"" + key + "\"");
    e[i] = parse_int(key.substr(pos, i < 2 ? end - pos : std::string::npos), "monomial key");
    pos = end + 1;
  }
  return e;
}

std::string exponent_key(const Exponent& e) {
  return std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]);
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(format_rational(q));
  return a;
}

Json ints(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

}  // namespace

Json series_json(const TruncSeries& s) {
  Json j = Json::object();
  for (const auto& [d, c] : s.terms()) j[std::to_string(d)] = format_rational(c);
  return j;
}

TruncSeries series_from(const Json& j, int trunc) {
  if (!j.is_object()) fail(error_kind::parse, "series must be an object mapping degree to rational");
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& [k, v] : j.items()) {
    int d = parse_int(k, "degree");
    if (d > trunc) fail(error_kind::parse, "degree " + k + " exceeds trunc " + std::to_string(trunc));
    terms.emplace_back(d, rational_from(v));
  }
  return TruncSeries(terms, trunc);
}

Json curve_json(const CurveGerm& c) {
  CurveGerm t = c.truncated(c.trunc());
  return Json{{"trunc", t.trunc()}, {"x", series_json(t.x())}, {"y", series_json(t.y())}, {"z", series_json(t.z())}};
}

CurveGerm curve_from(const Json& j) {
  int n = int_field(j, "trunc");
  return CurveGerm(series_from(field(j, "x"), n), series_from(field(j, "y"), n), series_from(field(j, "z"), n));
}

Json point_json(const TowerPoint& p) {
  return Json{{"level", p.level()}, {"chart", ints(p.chart())}, {"coords", rationals(p.coords())}};
}

TowerPoint point_from(const Json& j) {
  int level = int_field(j, "level");
  const Json& ch = field(j, "chart");
  const Json& co = field(j, "coords");
  if (!ch.is_array() || !co.is_array()) fail(error_kind::parse, "chart and coords must be arrays");
  std::vector<int> chart;
  for (const auto& v : ch) {
    if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > 2)
      fail(error_kind::parse, "chart entries are 0, 1 or 2");
    chart.push_back(v.get<int>());
  }
  if (static_cast<int>(chart.size()) != level) fail(error_kind::parse, "chart length differs from level");
  std::vector<Rational> coords;
  for (const auto& v : co) coords.push_back(rational_from(v));
  return TowerPoint(chart, coords);
}

Json poly_json(const Poly3& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[exponent_key(e)] = format_rational(c);
  return j;
}

Poly3 poly_from(const Json& j) {
  if (!j.is_object()) fail(error_kind::parse, "polynomial must be an object mapping \"i,j,k\" to rational");
  Poly3 p;
  for (const auto& [k, v] : j.items()) p.add(exponent_from(k), rational_from(v));
  return p;
}

Json jet_json(const PolyJet3& j) {
  return Json{{"degree", j.degree},
              {"phi1", poly_json(j.phi[0])},
              {"phi2", poly_json(j.phi[1])},
              {"phi3", poly_json(j.phi[2])}};
}

PolyJet3 jet_from(const Json& j) {
  PolyJet3 r;
  r.degree = int_field(j, "degree");
  const char* names[3] = {"phi1", "phi2", "phi3"};
  for (int i = 0; i < 3; ++i) {
    r.phi[i] = poly_from(field(j, names[i]));
    if (r.phi[i].degree() > r.degree) fail(error_kind::parse, std::string(names[i]) + " exceeds the jet degree");
  }
  return r;
}

Json trace_json(const ReductionTrace& t) {
  Json a = Json::array();
  for (const auto& s : t.steps) {
    Json j{{"kind", TraceStep::kind_name(s.kind)}};
    switch (s.kind) {
      case TraceStep::Kind::reparametrize:
        j["trunc"] = s.series.trunc();
        j["series"] = series_json(s.series);
        break;
      case TraceStep::Kind::coordinate_change: j["jet"] = jet_json(s.jet); break;
      case TraceStep::Kind::scale: j["factors"] = rationals({s.factors[0], s.factors[1], s.factors[2]}); break;
    }
    j["note"] = s.note;
    j["before"] = curve_json(s.before);
    j["after"] = curve_json(s.after);
    a.push_back(std::move(j));
  }
  return a;
}

ReductionTrace trace_from(const Json& j) {
  if (!j.is_array()) fail(error_kind::parse, "trace must be an array of steps");
  ReductionTrace t;
  for (const auto& sj : j) {
    TraceStep s;
    const Json& k = field(sj, "kind");
    std::string kind = k.is_string() ? k.get<std::string>() : "";
    if (kind == "reparametrize") {
      s.kind = TraceStep::Kind::reparametrize;
      s.series = series_from(field(sj, "series"), int_field(sj, "trunc"));
    } else if (kind == "coordinate-change") {
      s.kind = TraceStep::Kind::coordinate_change;
      s.jet = jet_from(field(sj, "jet"));
    } else if (kind == "scale") {
      s.kind = TraceStep::Kind::scale;
      const Json& f = field(sj, "factors");
      if (!f.is_array() || f.size() != 3) fail(error_kind::parse, "scale factors must be three rationals");
      for (int i = 0; i < 3; ++i) s.factors[i] = rational_from(f[i]);
    } else {
      fail(error_kind::parse, "unknown step kind \"" + kind + "\"");
    }
    if (sj.contains("note") && sj["note"].is_string()) s.note = sj["note"].get<std::string>();
    s.before = curve_from(field(sj, "before"));
    s.after = curve_from(field(sj, "after"));
    t.steps.push_back(std::move(s));
  }
  return t;
}

Json certificate_json(const Certificate& c) {
  return Json{{"phi", jet_json(c.phi)}, {"tau", Json{{"trunc", c.tau.trunc()}, {"series", series_json(c.tau)}}}};
}

Certificate certificate_from(const Json& j) {
  const Json& tau = field(j, "tau");
  return {jet_from(field(j, "phi")), series_from(field(tau, "series"), int_field(tau, "trunc"))};
}

Json semigroup_json(const Semigroup& s) {
  Json w = Json::array();
  for (const auto& [n, p] : s.witnesses) w.push_back(Json{{"order", n}, {"poly", poly_json(p)}});
  return Json{{"bound", s.bound},
              {"elements", ints(s.elements)},
              {"gaps", ints(s.gaps)},
              {"conductor", s.conductor ? Json(*s.conductor) : Json(nullptr)},
              {"witnesses", w}};
}

Json planarity_json(const PlanarityVerdict& v) {
  Json j{{"verdict", v.kind_name()}, {"degree_bound", v.degree_bound}, {"order_bound", v.order_bound}};
  if (v.kind == PlanarityVerdict::Kind::planar) j["witness"] = poly_json(v.witness);
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

Json equivalence_json(const EquivalenceResult& r) {
  Json j{{"result", r.kind_name()}};
  if (r.cert) {
    j["certificate"] = certificate_json(*r.cert);
    j["verified_trunc"] = r.verified_trunc;
  }
  if (r.kind == EquivalenceResult::Kind::separated)
    j["separation"] = Json{{"invariant", r.invariant}, {"first", r.value1}, {"second", r.value2}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json prolongation_json(const Prolongation& p) {
  Json s = Json::array();
  int n = 0;
  for (const auto& c : p.coords) n = std::max(n, c.trunc());
  for (const auto& c : p.coords) s.push_back(Json{{"trunc", c.trunc()}, {"series", series_json(c)}});
  return Json{{"point", point_json(p.point())}, {"code", p.point().code().str()}, {"series", s}};
}

Json census_json(const Census& c) {
  Json recs = Json::array();
  for (const auto& r : c.records) {
    Json curves = Json::array();
    for (const auto& g : r.curves) curves.push_back(curve_json(g));
    Json ev = Json::array();
    for (const auto& e : r.evidence)
      ev.push_back(Json{{"kind", Evidence::kind_name(e.kind)}, {"detail", e.detail}, {"verified", e.verified}});
    recs.push_back(Json{{"code", r.code.str()},
                        {"orbits", r.orbit_count},
                        {"tier", ClassRecord::tier_name(r.tier)},
                        {"separated", r.separated},
                        {"representatives", curves},
                        {"witness", point_json(r.witness)},
                        {"note", r.note},
                        {"evidence", ev}});
  }
  return Json{{"level", c.level}, {"classes", recs}, {"total", c.total}};
}

Json error_json(const Error& e) {
  return Json{{"error", Json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(error_kind::parse, std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(error_kind::parse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mt::io
