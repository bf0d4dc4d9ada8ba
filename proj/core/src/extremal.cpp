#include "polyzero/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polyzero/parallel.hpp"
#include "polyzero/winding.hpp"

namespace polyzero {

namespace {

constexpr int kCircleSamples = 1024;
constexpr double kMarginFactor = 0.5;
constexpr int kMaxShrinks = 80;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

PolyPoly stage_poly(std::span<const Complex> a, int upto) {
  std::vector<PolyPoly::Term> terms;
  for (int k = 1; k <= upto; ++k) {
    const Complex c = a[static_cast<std::size_t>(k - 1)];
    if (k % 2 == 0)
      terms.push_back({k, 0, c});
    else
      terms.push_back({0, k, c});
  }
  return PolyPoly(upto, terms);
}

void check_range(double radius, int k, int stage) {
  if (!(radius > 0.0) || !std::isfinite(radius) ||
      k * std::log10(std::max(radius, 1.0)) > 290.0)
    throw std::range_error("stage " + std::to_string(stage) +
                           ": radius beyond double range");
}

double min_abs_on_circle(const PolyPoly& p, Complex center, double rad) {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kCircleSamples; ++i) {
    const double th = kTwoPi * i / kCircleSamples;
    const Complex z = center + rad * Complex{std::cos(th), std::sin(th)};
    m = std::min(m, std::abs(eval(p, z)));
  }
  return m;
}

double min_ratio_on_circle(const PolyPoly& p, Complex center, double rad,
                           int k) {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kCircleSamples; ++i) {
    const double th = kTwoPi * i / kCircleSamples;
    const Complex z = center + rad * Complex{std::cos(th), std::sin(th)};
    const double az = std::abs(z);
    const double pv = std::abs(eval(p, z));
    if (az == 0.0) {
      if (pv == 0.0) return 0.0;
      continue;
    }
    m = std::min(m, pv / std::pow(az, k));
  }
  return m;
}

// Half the distance from each point to its nearest neighbour.  Using a
// per-point radius keeps the probe circles around far-out ring zeros from
// collapsing to the tight spacing of the innermost ones, which would drive
// the stage bounds (and with them the coefficients) out of double range.
std::vector<double> half_nearest_distance(std::span<const Complex> pts) {
  std::vector<double> d(pts.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double s = std::abs(pts[i] - pts[j]);
      d[i] = std::min(d[i], s);
      d[j] = std::min(d[j], s);
    }
  for (double& v : d) v *= 0.5;
  return d;
}

std::vector<Complex> stage_ring_seeds(Complex a_prev, Complex a_k, int k) {
  const double rho = std::abs(a_prev) / std::abs(a_k);
  const double base_arg = std::arg(a_prev / a_k);
  std::vector<Complex> out;
  for (int j = 1; j <= 2 * k - 1; ++j) {
    const double phi = (base_arg + (2 * j + 1) * std::numbers::pi) / (2 * k - 1);
    out.push_back(rho * Complex{std::cos(phi), std::sin(phi)});
  }
  return out;
}

// Re-converge the running zero list after appending the stage-k term.
std::vector<Complex> refine_stage_zeros(const PolyPoly& pk,
                                        std::span<const Complex> inherited,
                                        std::span<const Complex> ring,
                                        int stage) {
  std::vector<Complex> out;
  NewtonOptions opt;
  auto run = [&](Complex seed) {
    const RootResult r = polish_root(pk, newton(pk, seed, opt), opt);
    if (!r.converged)
      throw std::domain_error("stage " + std::to_string(stage) +
                              ": zero refinement did not converge");
    out.push_back(r.z);
  };
  for (Complex z : inherited) run(z);
  for (Complex z : ring) run(z);
  return out;
}

struct StageBounds {
  double bound_a;
  double bound_b;
  double accept;  // kMarginFactor * min(bound_a, bound_b)
};

StageBounds stage_bounds(const PolyPoly& prev, std::span<const Complex> zeros,
                         std::span<const double> deltas, double r_prev, int k) {
  StageBounds sb{};
  sb.bound_a = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < zeros.size(); ++i)
    sb.bound_a =
        std::min(sb.bound_a, min_ratio_on_circle(prev, zeros[i], deltas[i], k));
  sb.bound_b = min_abs_on_circle(prev, {0.0, 0.0}, r_prev) / std::pow(r_prev, k);
  sb.accept = kMarginFactor * std::min(sb.bound_a, sb.bound_b);
  return sb;
}

ExtremalSchedule build_schedule(int n, std::span<const Complex> base,
                                bool shrink_to_fit) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!base.empty() && static_cast<int>(base.size()) != n)
    throw std::invalid_argument("base must have exactly n coefficients");

  ExtremalSchedule s;
  s.a.push_back(base.empty() ? Complex{1.0, 0.0} : base[0]);
  if (s.a[0] == Complex{0.0, 0.0})
    throw std::invalid_argument("a_1 must be nonzero");
  s.r.assign(1, 1.0);  // placeholder until stage 2 fixes the first radius
  s.margins.assign(1, std::numeric_limits<double>::infinity());

  std::vector<Complex> zeros{Complex{0.0, 0.0}};

  for (int k = 2; k <= n; ++k) {
    const PolyPoly prev = stage_poly(s.a, k - 1);
    const Complex a_prev = s.a.back();
    Complex propose = base.empty()
                          ? Complex{std::abs(a_prev) * std::pow(10.0, -(k + 1)), 0.0}
                          : base[static_cast<std::size_t>(k - 1)];
    if (propose == Complex{0.0, 0.0})
      throw std::invalid_argument("stage coefficients must be nonzero");

    std::vector<double> deltas = zeros.size() >= 2
                                     ? half_nearest_distance(zeros)
                                     : std::vector<double>{0.0};

    StageBounds sb{};
    bool accepted = false;
    double r_prev = 0.0;
    for (int shrink = 0; shrink <= kMaxShrinks; ++shrink) {
      const double rho = std::abs(a_prev) / std::abs(propose);
      r_prev = (k == 2) ? 0.25 * rho : s.r[static_cast<std::size_t>(k - 2)];
      if (zeros.size() < 2) deltas[0] = 0.25 * rho;
      double extent = r_prev;
      for (std::size_t i = 0; i < zeros.size(); ++i)
        extent = std::max(extent, std::abs(zeros[i]) + deltas[i]);
      check_range(extent, k, k);
      check_range(rho, k, k);
      sb = stage_bounds(prev, zeros, deltas, r_prev, k);
      if (std::abs(propose) < sb.accept) {
        accepted = true;
        break;
      }
      if (!shrink_to_fit) {
        accepted = true;  // trusted coefficients: record the slack as-is
        break;
      }
      propose *= 0.1;
    }
    if (!accepted)
      throw std::domain_error("stage " + std::to_string(k) +
                              ": no coefficient satisfies the margins");

    s.a.push_back(propose);
    s.margins.push_back(std::min(sb.bound_a, sb.bound_b) - std::abs(propose));
    const double rho = std::abs(a_prev) / std::abs(propose);
    if (k == 2) s.r[0] = 0.25 * rho;
    check_range(2.0 * rho, k, k);
    s.r.push_back(2.0 * rho);
    if (s.r[static_cast<std::size_t>(k - 1)] <=
        s.r[static_cast<std::size_t>(k - 2)])
      throw std::domain_error("stage " + std::to_string(k) +
                              ": radii not strictly increasing");

    const PolyPoly pk = stage_poly(s.a, k);
    zeros = refine_stage_zeros(pk, zeros,
                               stage_ring_seeds(a_prev, propose, k), k);
  }
  return s;
}

}  // namespace

ExtremalSchedule extremal_coefficients(int n, std::span<const Complex> base) {
  return build_schedule(n, base, /*shrink_to_fit=*/true);
}

ExtremalSchedule schedule_from_coefficients(std::span<const Complex> coeffs) {
  return build_schedule(static_cast<int>(coeffs.size()), coeffs,
                        /*shrink_to_fit=*/false);
}

PolyPoly extremal_poly(const ExtremalSchedule& s) {
  if (s.a.empty()) throw std::invalid_argument("empty schedule");
  return stage_poly(s.a, s.n());
}

std::vector<Seed> truncation_seeds(const ExtremalSchedule& s) {
  std::vector<Seed> seeds;
  seeds.push_back({1, 1, Complex{0.0, 0.0}});
  for (int k = 2; k <= s.n(); ++k) {
    const auto ring = stage_ring_seeds(s.a[static_cast<std::size_t>(k - 2)],
                                       s.a[static_cast<std::size_t>(k - 1)], k);
    for (int j = 0; j < static_cast<int>(ring.size()); ++j)
      seeds.push_back({k, j + 1, ring[static_cast<std::size_t>(j)]});
  }
  return seeds;
}

ExtremalVerification verify_extremal(const ExtremalSchedule& s, int threads) {
  const PolyPoly p = extremal_poly(s);
  const auto seeds = truncation_seeds(s);
  const double boundary = s.r.back();
  check_range(boundary, s.n(), s.n());

  std::vector<RootResult> roots(seeds.size());
  std::vector<double> rel(seeds.size(), 0.0);
  parallel_for(seeds.size(), threads, [&](std::size_t i) {
    const Seed& seed = seeds[i];
    const double ak = std::abs(s.a[static_cast<std::size_t>(seed.stage - 1)]);
    NewtonOptions opt;
    opt.residual_scale = [ak, k = seed.stage](Complex z) {
      return ak * std::pow(std::abs(z), k);
    };
    RootResult r = newton(p, seed.zeta, opt);
    if (r.converged) r = polish_root(p, r, opt);
    roots[i] = r;
    const double scale = opt.residual_scale(r.z);
    rel[i] = r.residual == 0.0
                 ? 0.0
                 : (scale > 0.0 ? r.residual / scale
                                : std::numeric_limits<double>::infinity());
  });

  ExtremalVerification v;
  for (double x : rel) v.max_relative_residual = std::max(v.max_relative_residual, x);
  v.census = census_from_roots(p, roots, boundary);
  return v;
}

}  // namespace polyzero
