#ifndef POLYZERO_BOUNDS_HPP
#define POLYZERO_BOUNDS_HPP

#include <optional>
#include <span>
#include <vector>

#include "polyzero/polypoly.hpp"

namespace polyzero {

struct DominanceSurplus {
  int ell;         // index of the dominant top-degree coefficient
  double alpha_n;  // |c[ell][n-ell]| - sum of the other top magnitudes, > 0
};

std::optional<DominanceSurplus> dominance_surplus(const PolyPoly& p);

// c[k] = (sum_{j<=k} |coeff(j, k-j)|) / alpha_n for k = 0..n-1.
std::vector<double> auxiliary_coefficients(const PolyPoly& p);

// Unique positive root of q(t) = t^n - sum_k c[k] t^k (zero when all c[k]
// vanish).  Entries must be nonnegative.
double radius_r0(std::span<const double> c);

/* All zeros lie in |z| <= r for each radius below:
     r0  root of the auxiliary polynomial (tightest of the three)
     r1  max(1, sum c[k])            Lagrange-style
     r2  1 + max c[k]                Cauchy-style
   applicable is false when no strictly dominant top coefficient exists,
   in which case no radii are produced. */
struct BoundsReport {
  bool applicable = false;
  int ell = -1;
  double alpha_n = 0.0;
  std::vector<double> c;
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

BoundsReport bounds_report(const PolyPoly& p);

}  // namespace polyzero

#endif
