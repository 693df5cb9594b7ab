#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <doctest.h>

#include "mt/batch.hpp"
#include "mt/error.hpp"

using namespace mt;
using namespace mt::testing;

namespace {

std::vector<CurveGerm> disguised(std::uint64_t seed, int n, int trunc) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<int, 3>> forms{{1, 0, 0}, {2, 3, 0}, {2, 5, 0}, {3, 5, 7}, {3, 5, 0}, {3, 4, 5}, {4, 6, 7}};
  std::vector<CurveGerm> out;
  for (int i = 0; i < n; ++i) {
    auto f = forms[i % forms.size()];
    auto t = [trunc](int d) { return d == 0 ? TruncSeries(trunc) : TruncSeries::monomial(1, d, trunc); };
    CurveGerm c(t(f[0]), t(f[1]), t(f[2]));
    out.push_back(jet_eval_on_curve(sample_jet(rng).jet(), reparametrize(c, random_reparam(rng, trunc))));
  }
  return out;
}

}  // namespace

TEST_CASE("parallel semigroups match the serial reference") {
  auto curves = disguised(1, 21, 24);
  auto a = batch_semigroups(curves, 20, Exec::serial);
  auto b = batch_semigroups(curves, 20, Exec::parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("parallel codes match the serial reference") {
  auto curves = disguised(2, 14, 24);
  CHECK(batch_rvt_codes(curves, 3, Exec::serial) == batch_rvt_codes(curves, 3, Exec::parallel));
}

TEST_CASE("parallel prolonged action matches the serial reference") {
  std::mt19937_64 rng(3);
  std::vector<DiffeoJet> jets;
  for (int i = 0; i < 16; ++i) jets.push_back(sample_jet(rng));
  for (int level = 1; level <= 3; ++level) {
    TowerPoint p = random_point(rng, level);
    CHECK(batch_prolong_apply(jets, p, Exec::serial) == batch_prolong_apply(jets, p, Exec::parallel));
  }
}

TEST_CASE("parallel planarity matches the serial reference") {
  auto curves = disguised(4, 7, 32);
  auto a = batch_planarity(curves, 5, 24, Exec::serial);
  auto b = batch_planarity(curves, 5, 24, Exec::parallel);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].kind == b[i].kind);
    CHECK(a[i].witness == b[i].witness);
  }
}

TEST_CASE("errors surface identically") {
  auto curves = disguised(5, 4, 24);
  curves.push_back(CurveGerm(TruncSeries(24), TruncSeries(24), TruncSeries(24)));
  for (Exec e : {Exec::serial, Exec::parallel}) CHECK_THROWS_AS(batch_semigroups(curves, 20, e), Error);
}
