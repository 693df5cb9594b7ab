#pragma once

#include <json.hpp>
#include <string>

#include "mt/census.hpp"
#include "mt/curve.hpp"
#include "mt/diffeo.hpp"
#include "mt/error.hpp"
#include "mt/invariants.hpp"
#include "mt/normalize.hpp"
#include "mt/tower.hpp"

namespace mt::io {

// Insertion-ordered so output follows degree and field order.
using Json = nlohmann::ordered_json;

Json series_json(const TruncSeries& s);
TruncSeries series_from(const Json& j, int trunc);

Json curve_json(const CurveGerm& c);
CurveGerm curve_from(const Json& j);

Json point_json(const TowerPoint& p);
TowerPoint point_from(const Json& j);

Json poly_json(const Poly3& p);
Poly3 poly_from(const Json& j);

Json jet_json(const PolyJet3& j);
PolyJet3 jet_from(const Json& j);

Json trace_json(const ReductionTrace& t);
ReductionTrace trace_from(const Json& j);

Json certificate_json(const Certificate& c);
Certificate certificate_from(const Json& j);

Json semigroup_json(const Semigroup& s);
Json planarity_json(const PlanarityVerdict& v);
Json equivalence_json(const EquivalenceResult& r);
Json prolongation_json(const Prolongation& p);
Json census_json(const Census& c);
Json error_json(const Error& e);

// Parses text, converting JSON syntax errors to parse errors.
Json parse_text(const std::string& text);
Json read_file(const std::string& path);
// Two-space indented with a trailing newline.
std::string dump(const Json& j);

}  // namespace mt::io
