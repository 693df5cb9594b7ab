#include "mt/batch.hpp"

#include <exception>
#include <optional>

namespace mt {

namespace {

template <class T, class F>
std::vector<T> run(std::size_t n, Exec exec, F f) {
  std::vector<std::optional<T>> out(n);
  std::vector<std::exception_ptr> err(n);
  auto body = [&](std::size_t i) {
    try {
      out[i].emplace(f(i));
    } catch (...) {
      err[i] = std::current_exception();
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
  std::vector<T> res;
  res.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (err[i]) std::rethrow_exception(err[i]);
    res.push_back(std::move(*out[i]));
  }
  return res;
}

}  // namespace

std::vector<Semigroup> batch_semigroups(const std::vector<CurveGerm>& curves, int bound, Exec exec) {
  return run<Semigroup>(curves.size(), exec, [&](std::size_t i) { return semigroup(curves[i], bound); });
}

std::vector<RVTWord> batch_rvt_codes(const std::vector<CurveGerm>& curves, int level, Exec exec) {
  return run<RVTWord>(curves.size(), exec, [&](std::size_t i) { return rvt_code(curves[i], level); });
}

std::vector<TowerPoint> batch_prolong_apply(const std::vector<DiffeoJet>& jets, const TowerPoint& p, Exec exec) {
  return run<TowerPoint>(jets.size(), exec, [&](std::size_t i) { return prolong_apply(jets[i], p); });
}

std::vector<PlanarityVerdict> batch_planarity(const std::vector<CurveGerm>& curves, int degree_bound, int order_bound,
                                              Exec exec) {
  return run<PlanarityVerdict>(curves.size(), exec,
                               [&](std::size_t i) { return planarity(curves[i], degree_bound, order_bound); });
}

}  // namespace mt
