#ifndef POLYZERO_ROOTFIND_HPP
#define POLYZERO_ROOTFIND_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "polyzero/polypoly.hpp"

namespace polyzero {

struct SingularPointError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NewtonOptions {
  int max_iter = 100;
  double tol_step = 1e-14;      // relative to 1 + |z|
  double tol_residual = 1e-12;  // relative to residual_scale(z)
  double jacobian_floor = 1e-300;
  // Scale used for the relative residual test; defaults to
  // max(1, |z|^deg) * max coefficient magnitude.
  std::function<double(Complex)> residual_scale;
};

struct RootResult {
  Complex z{0.0, 0.0};
  bool converged = false;
  int iters = 0;
  double residual = 0.0;   // |P(z)| at the final iterate
  int jacobian_sign = 0;   // sign of |dP/dz|^2 - |dP/dzbar|^2, 0 when singular
};

/* One step of Newton's method for P(z, zbar) = 0: solve the linearization
       a*d + b*conj(d) = -P(z),  a = dP/dz, b = dP/dzbar,
   whose determinant is the Jacobian J = |a|^2 - |b|^2, and return the
   updated point z + d.  Throws SingularPointError when
   |J| <= jacobian_floor. */
Complex newton_step(const PolyPoly& p, Complex z,
                    double jacobian_floor = 1e-300);

// Damped Newton iteration: a full step is halved (up to 20 times) until the
// residual decreases.  converged reports whether the final residual passed
// the relative residual test.
RootResult newton(const PolyPoly& p, Complex z0, const NewtonOptions& opt = {});

// Extra damped steps from an already-converged root while the residual still
// improves.  Tightens linearly-converging (singular) zeros to the point
// where nearby duplicates collapse within the dedupe radius.
RootResult polish_root(const PolyPoly& p, RootResult r, const NewtonOptions& opt = {});

struct CensusZero {
  Complex z{0.0, 0.0};
  int index = 0;
  int jacobian_sign = 0;
  double residual = 0.0;
};

struct ZeroCensus {
  std::vector<CensusZero> zeros;
  int total_winding = 0;
  // Sum of the per-zero indices equals the boundary winding; when true the
  // census provably lists every zero in the open disk.
  bool certified = false;
};

struct AtlasOptions {
  NewtonOptions newton;
  double grid_spacing = 0.0;  // <= 0 selects disk_radius / (4 * deg)
  int threads = 1;
};

// Deduplicates converged roots (radius 1e-8 * (1 + |z|), first kept), drops
// points outside the disk, sorts by (re, im), indexes each zero by a local
// winding circle sized from the census spacing, and checks the index sum
// against the boundary winding.
ZeroCensus census_from_roots(const PolyPoly& p,
                             std::span<const RootResult> roots,
                             double boundary_radius);

/* Zero census over the closed disk |z| <= disk_radius: Newton launched from
   a hexagonal seed grid (plus extra_seeds), converged roots deduplicated at
   radius 1e-8 * (1 + |z|), each zero indexed by a local winding circle, and
   the index sum checked against the boundary winding.  P must be nonzero on
   the boundary circle. */
ZeroCensus zero_atlas(const PolyPoly& p, double disk_radius,
                      const AtlasOptions& opt = {},
                      std::span<const Complex> extra_seeds = {});

}  // namespace polyzero

#endif
