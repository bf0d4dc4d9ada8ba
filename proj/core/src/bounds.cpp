#include "polyzero/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyzero {

namespace {
constexpr double kGuard = 1e-12;
}

std::optional<DominanceSurplus> dominance_surplus(const PolyPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const int n = p.degree_bound();
  int ell = -1;
  double best = 0.0, total = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double m = std::abs(p.coeff(j, n - j));
    total += m;
    if (m > best) {
      best = m;
      ell = j;
    }
  }
  const double surplus = best - (total - best);
  if (ell < 0 || surplus <= kGuard * best) return std::nullopt;
  return DominanceSurplus{ell, surplus};
}

std::vector<double> auxiliary_coefficients(const PolyPoly& p) {
  const auto dom = dominance_surplus(p);
  if (!dom) throw std::domain_error("no dominant top-degree coefficient");
  const int n = p.degree_bound();
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += std::abs(p.coeff(j, k - j));
    c[static_cast<std::size_t>(k)] = s / dom->alpha_n;
  }
  return c;
}

double radius_r0(std::span<const double> c) {
  const int n = static_cast<int>(c.size());
  if (n == 0) throw std::invalid_argument("empty coefficient list");
  bool all_zero = true;
  for (double v : c) {
    if (v < 0.0 || !std::isfinite(v))
      throw std::invalid_argument("auxiliary coefficients must be >= 0");
    if (v > 0.0) all_zero = false;
  }
  if (all_zero) return 0.0;

  const auto q = [&](double t) {
    double acc = 1.0;  // t^n by Horner together with the lower terms
    for (int k = n - 1; k >= 0; --k) acc = acc * t - c[static_cast<std::size_t>(k)];
    return acc;
  };
  const auto dq = [&](double t) {
    double acc = static_cast<double>(n);
    for (int k = n - 1; k >= 1; --k)
      acc = acc * t - static_cast<double>(k) * c[static_cast<std::size_t>(k)];
    return acc;
  };

  double sum = 0.0, mx = 0.0;
  for (double v : c) {
    sum += v;
    mx = std::max(mx, v);
  }
  // q is negative on (0, r0) and positive beyond; both classical radii
  // bracket the sign change from above.
  double lo = 0.0;
  double hi = std::min(std::max(1.0, sum), 1.0 + mx);
  if (q(hi) == 0.0) return hi;
  while (q(hi) < 0.0) hi *= 2.0;  // guard against rounding at the bracket edge
  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (q(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 60; ++i) {
    const double d = dq(x);
    if (d == 0.0) break;
    double step = q(x) / d;
    double next = x - step;
    if (next < lo || next > hi) next = 0.5 * (lo + hi);  // stay bracketed
    if (q(next) < 0.0)
      lo = next;
    else
      hi = next;
    if (std::fabs(next - x) <= 1e-14 * std::fabs(next)) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

BoundsReport bounds_report(const PolyPoly& p) {
  BoundsReport rep;
  const auto dom = dominance_surplus(p);
  if (!dom) return rep;
  rep.applicable = true;
  rep.ell = dom->ell;
  rep.alpha_n = dom->alpha_n;
  rep.c = auxiliary_coefficients(p);
  double sum = 0.0, mx = 0.0;
  for (double v : rep.c) {
    sum += v;
    mx = std::max(mx, v);
  }
  rep.r0 = rep.c.empty() ? 0.0 : radius_r0(rep.c);
  rep.r1 = std::max(1.0, sum);
  rep.r2 = 1.0 + mx;
  return rep;
}

}  // namespace polyzero
