#include "polyzero/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyzero/parallel.hpp"
#include "polyzero/winding.hpp"

namespace polyzero {

namespace {

bool finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

struct Derivatives {
  PolyPoly dz;
  PolyPoly dzbar;
};

Derivatives derivatives(const PolyPoly& p) {
  return {wirtinger(p, Wirtinger::dz), wirtinger(p, Wirtinger::dzbar)};
}

double default_scale(const PolyPoly& p, Complex z) {
  return std::max(1.0, std::pow(std::abs(z), p.degree_bound())) *
         p.max_coeff_magnitude();
}

// Solve a*d + b*conj(d) = -w for d; the system determinant is the Jacobian.
Complex solve_step(Complex a, Complex b, Complex w, double jac) {
  return (b * std::conj(w) - std::conj(a) * w) / jac;
}

int jac_sign(double jac, double floor_) {
  if (std::fabs(jac) <= floor_) return 0;
  return jac > 0.0 ? 1 : -1;
}

}  // namespace

Complex newton_step(const PolyPoly& p, Complex z, double jacobian_floor) {
  const auto d = derivatives(p);
  const Complex a = eval(d.dz, z);
  const Complex b = eval(d.dzbar, z);
  const double jac = std::norm(a) - std::norm(b);
  if (!std::isfinite(jac) || std::fabs(jac) <= jacobian_floor)
    throw SingularPointError("singular point: Jacobian below floor");
  return z + solve_step(a, b, eval(p, z), jac);
}

RootResult newton(const PolyPoly& p, Complex z0, const NewtonOptions& opt) {
  const auto d = derivatives(p);
  const auto scale = [&](Complex z) {
    return opt.residual_scale ? opt.residual_scale(z) : default_scale(p, z);
  };
  const auto rel_ok = [&](double r, Complex z) {
    if (r == 0.0) return true;
    const double s = scale(z);
    return r <= opt.tol_residual * s;
  };

  RootResult res;
  Complex z = z0;
  Complex w = eval(p, z);
  double wm = std::abs(w);
  double jac = 0.0;
  bool have_jac = false;

  for (int iter = 0; iter < opt.max_iter; ++iter) {
    if (!std::isfinite(wm)) break;
    if (rel_ok(wm, z)) break;
    const Complex a = eval(d.dz, z);
    const Complex b = eval(d.dzbar, z);
    jac = std::norm(a) - std::norm(b);
    have_jac = true;
    if (!std::isfinite(jac) || std::fabs(jac) <= opt.jacobian_floor) break;
    const Complex delta = solve_step(a, b, w, jac);
    if (!finite(delta)) break;

    double lam = 1.0;
    Complex zn, wn;
    double wnm = 0.0;
    bool improved = false;
    for (int h = 0; h <= 20; ++h) {
      zn = z + lam * delta;
      wn = eval(p, zn);
      wnm = std::abs(wn);
      if (wnm < wm) {
        improved = true;
        break;
      }
      lam *= 0.5;
    }
    if (!improved) break;
    const double step = std::abs(lam * delta);
    z = zn;
    w = wn;
    wm = wnm;
    res.iters = iter + 1;
    if (step < opt.tol_step * (1.0 + std::abs(z))) break;
  }

  res.z = z;
  res.residual = wm;
  res.converged = std::isfinite(wm) && rel_ok(wm, z);
  if (!have_jac || res.converged) {
    const Complex a = eval(d.dz, z);
    const Complex b = eval(d.dzbar, z);
    jac = std::norm(a) - std::norm(b);
  }
  res.jacobian_sign = std::isfinite(jac) ? jac_sign(jac, opt.jacobian_floor) : 0;
  return res;
}

RootResult polish_root(const PolyPoly& p, RootResult r, const NewtonOptions& opt) {
  if (!r.converged) return r;
  const auto d = derivatives(p);
  Complex z = r.z;
  // Compensated evaluation: near a zero with a degenerate Jacobian the
  // residual shrinks quadratically in the position error, so plain eval noise
  // stalls the iteration at a position error near sqrt(eps).
  Complex w = eval_compensated(p, z);
  double wm = std::abs(w);
  for (int iter = 0; iter < opt.max_iter && wm > 0.0; ++iter) {
    const Complex a = eval(d.dz, z);
    const Complex b = eval(d.dzbar, z);
    const double jac = std::norm(a) - std::norm(b);
    if (!std::isfinite(jac) || std::fabs(jac) <= opt.jacobian_floor) break;
    const Complex delta = solve_step(a, b, w, jac);
    if (!finite(delta)) break;
    double lam = 1.0;
    bool improved = false;
    Complex zn, wn;
    double wnm = 0.0;
    for (int h = 0; h <= 20; ++h) {
      zn = z + lam * delta;
      wn = eval_compensated(p, zn);
      wnm = std::abs(wn);
      if (wnm < wm) {
        improved = true;
        break;
      }
      lam *= 0.5;
    }
    if (!improved) break;
    const double step = std::abs(zn - z);
    z = zn;
    w = wn;
    wm = wnm;
    if (step < opt.tol_step * (1.0 + std::abs(z))) break;
  }
  r.z = z;
  r.residual = wm;
  const Complex a = eval(d.dz, z);
  const Complex b = eval(d.dzbar, z);
  const double jac = std::norm(a) - std::norm(b);
  r.jacobian_sign = std::isfinite(jac) ? jac_sign(jac, opt.jacobian_floor) : 0;
  return r;
}

namespace {

std::vector<Complex> hex_grid(double radius, double h) {
  std::vector<Complex> seeds;
  const double row_dy = h * std::sqrt(3.0) / 2.0;
  const int mrows = static_cast<int>(std::floor(radius / row_dy));
  for (int m = -mrows; m <= mrows; ++m) {
    const double y = m * row_dy;
    const double x0 = (m & 1) ? 0.5 * h : 0.0;
    const int cols = static_cast<int>(std::floor((radius + h) / h)) + 1;
    for (int i = -cols; i <= cols; ++i) {
      const double x = x0 + i * h;
      if (x * x + y * y <= radius * radius) seeds.emplace_back(x, y);
    }
  }
  return seeds;
}

}  // namespace

ZeroCensus census_from_roots(const PolyPoly& p,
                             std::span<const RootResult> roots_in,
                             double boundary_radius) {
  ZeroCensus census;
  census.total_winding =
      winding(p, Curve::circle({0.0, 0.0}, boundary_radius)).wind;

  std::vector<RootResult> roots;
  for (const auto& r : roots_in) {
    if (!r.converged || std::abs(r.z) > boundary_radius) continue;
    bool dup = false;
    for (const auto& kept : roots)
      if (std::abs(r.z - kept.z) <= 1e-8 * (1.0 + std::abs(kept.z))) {
        dup = true;
        break;
      }
    if (!dup) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(),
            [](const RootResult& a, const RootResult& b) {
              if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
              return a.z.imag() < b.z.imag();
            });

  int index_sum = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i) dmin = std::min(dmin, std::abs(roots[i].z - roots[j].z));
    const double to_boundary = boundary_radius - std::abs(roots[i].z);
    const double hint = 0.25 * std::min(dmin, std::max(to_boundary, 1e-12));
    CensusZero cz;
    cz.z = roots[i].z;
    cz.jacobian_sign = roots[i].jacobian_sign;
    cz.residual = roots[i].residual;
    cz.index = zero_index(p, cz.z, hint);
    index_sum += cz.index;
    census.zeros.push_back(cz);
  }
  census.certified = (index_sum == census.total_winding);
  return census;
}

ZeroCensus zero_atlas(const PolyPoly& p, double disk_radius,
                      const AtlasOptions& opt,
                      std::span<const Complex> extra_seeds) {
  if (!(disk_radius > 0.0) || !std::isfinite(disk_radius))
    throw std::invalid_argument("disk radius must be positive");
  if (p.is_zero())
    throw std::domain_error("zero polynomial vanishes identically");

  const int deg = std::max(1, p.degree_bound());
  const double h =
      opt.grid_spacing > 0.0 ? opt.grid_spacing : disk_radius / (4.0 * deg);
  std::vector<Complex> seeds = hex_grid(disk_radius, h);
  seeds.insert(seeds.end(), extra_seeds.begin(), extra_seeds.end());

  std::vector<RootResult> results(seeds.size());
  parallel_for(seeds.size(), opt.threads, [&](std::size_t i) {
    RootResult r = newton(p, seeds[i], opt.newton);
    if (r.converged) r = polish_root(p, r, opt.newton);
    results[i] = r;
  });

  return census_from_roots(p, results, disk_radius);
}

}  // namespace polyzero
