#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mt/curve.hpp"
#include "mt/tower.hpp"

namespace mt {

constexpr int max_census_level = 4;

std::vector<Letter> class_successors(Letter l);
std::vector<RVTWord> enumerate_classes(int level);

struct Evidence {
  enum class Kind { membership, merge_certificate, separation, fiber_computation, paper_citation } kind;
  std::string detail;
  // False only for paper citations.
  bool verified = true;
  static std::string kind_name(Kind k);
};

struct ClassRecord {
  enum class Tier { verified_by_tool, paper_asserted };

  RVTWord code;
  int orbit_count = 1;
  std::vector<CurveGerm> curves;
  // A point of the class built direction by direction.
  TowerPoint witness;
  std::vector<Evidence> evidence;
  // Orbits the tool tells apart by invariants.
  int separated = 0;
  Tier tier = Tier::paper_asserted;
  std::string note;

  static std::string tier_name(Tier t);
};

// Published orbit count of a class at levels 1-4.
int published_orbit_count(const RVTWord& code);

// Catalog curves of the class; tag explains an empty answer.
std::vector<CurveGerm> representatives(const RVTWord& code, int trunc = 32, std::string* tag = nullptr);

// A point with the given code, each direction picked from a small fixed candidate list.
TowerPoint class_witness(const RVTWord& code);

// Curves (t^5 + ..., t^8 + ..., t^11 + ...) through the two RVVV orbits; c1 = 0 gives the [1:0] orbit.
CurveGerm rvvv_curve(const Rational& c1, int trunc = 32);

struct Census {
  int level = 0;
  std::vector<ClassRecord> records;
  int total = 0;
};

Census orbit_census(int level);

struct RvvvReport {
  bool ok = true;
  std::vector<std::string> lines;
  std::string conclusion;
  std::optional<std::string> offending;
};

RvvvReport verify_rvvv_split(std::uint64_t seed = 0, int jets = 20);

}  // namespace mt
