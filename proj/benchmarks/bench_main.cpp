#include <algorithm>
#include <span>
#include <vector>

#include <benchmark/benchmark.h>

#include <polyzero/extremal.hpp>
#include <polyzero/polypoly.hpp>
#include <polyzero/rootfind.hpp>
#include <polyzero/winding.hpp>

namespace {

using polyzero::Complex;
using polyzero::PolyPoly;

PolyPoly make(std::initializer_list<PolyPoly::Term> ts) {
  int n = 0;
  for (const auto& t : ts) n = std::max(n, t.j + t.k);
  return PolyPoly(n, std::span<const PolyPoly::Term>(ts.begin(), ts.size()));
}

PolyPoly quadratic_mixed() {  // z^2 + z + zbar + 1
  return make({{2, 0, 1.0}, {1, 0, 1.0}, {0, 1, 1.0}, {0, 0, 1.0}});
}

const polyzero::ExtremalSchedule& ten_stage_schedule() {
  static const polyzero::ExtremalSchedule s = [] {
    const std::vector<Complex> coeffs = {1.0,   1.0,   1e-1,  1e-3,  1e-6,
                                         1e-10, 1e-16, 1e-24, 1e-34, 1e-47};
    return polyzero::schedule_from_coefficients(coeffs);
  }();
  return s;
}

void BM_eval(benchmark::State& state) {
  const PolyPoly p = polyzero::extremal_poly(ten_stage_schedule());
  const Complex z{0.37, -1.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(polyzero::eval(p, z));
  }
}
BENCHMARK(BM_eval);

void BM_winding_circle(benchmark::State& state) {
  const PolyPoly p = quadratic_mixed();
  const auto circle = polyzero::Curve::circle({0.0, 0.0}, 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polyzero::winding(p, circle));
  }
}
BENCHMARK(BM_winding_circle);

void BM_zero_atlas(benchmark::State& state) {
  const PolyPoly p = quadratic_mixed();
  for (auto _ : state) {
    benchmark::DoNotOptimize(polyzero::zero_atlas(p, 3.0));
  }
}
BENCHMARK(BM_zero_atlas);

void BM_extremal_verify(benchmark::State& state) {
  const auto schedule = polyzero::extremal_coefficients(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polyzero::verify_extremal(schedule));
  }
}
BENCHMARK(BM_extremal_verify);

}  // namespace

BENCHMARK_MAIN();
