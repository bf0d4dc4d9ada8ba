#ifndef POLYZERO_EXTREMAL_HPP
#define POLYZERO_EXTREMAL_HPP

#include <span>
#include <vector>

#include "polyzero/polypoly.hpp"
#include "polyzero/rootfind.hpp"

namespace polyzero {

/* Staged construction of degree-n polynomials with n^2 distinct zeros:

     P_1 = a_1 zbar,   P_k = P_{k-1} + a_k z^k (k even) or a_k zbar^k (k odd)

   Each stage keeps the previous k^2 - 2k + 1 zeros (slightly moved) and adds
   2k - 1 new ones near the circle |z| = |a_{k-1}| / |a_k|, provided a_k is
   small enough. */
struct ExtremalSchedule {
  std::vector<Complex> a;       // a_1 .. a_n
  std::vector<double> r;        // nested radii r_1 < ... < r_n; all the zeros
                                // of P_k lie inside |z| = r_k
  std::vector<double> margins;  // per-stage slack of the acceptance bound
                                // over |a_k| (infinity for stage 1)
  int n() const { return static_cast<int>(a.size()); }
};

/* Chooses a_1..a_n by validating, at each stage k >= 2, the two sampled
   inequalities that force zero persistence and ring creation:

     (A)  |a_k| < min_j  min over the circle |z - z_j| = delta  of
                  |P_{k-1}(z)| / |z|^k        (z_j: zeros of P_{k-1},
                                               delta: half the minimum
                                               pairwise zero distance)
     (B)  |a_k| < r_{k-1}^{-k} * min over |z| = r_{k-1} of |P_{k-1}(z)|

   both with a factor-2 margin over 1024 circle samples.  Stage proposals
   come from base when given (else |a_{k-1}| * 10^-(k+1)) and are divided by
   10 until both inequalities hold.  Throws std::range_error when the
   required radii exceed double range and std::domain_error when a stage
   cannot be satisfied. */
ExtremalSchedule extremal_coefficients(int n,
                                       std::span<const Complex> base = {});

// Schedule from trusted coefficients: no shrinking, margins are measured
// as-is and may be negative.  Radii are derived the same way.
ExtremalSchedule schedule_from_coefficients(std::span<const Complex> coeffs);

PolyPoly extremal_poly(const ExtremalSchedule& s);

struct Seed {
  int stage;  // k: the truncation a_k m_k + a_{k-1} m_{k-1} the seed solves
  int j;
  Complex zeta;
};

// n^2 seeds: 0 for stage 1, then 2k-1 per stage k on |z| = |a_{k-1}|/|a_k|.
std::vector<Seed> truncation_seeds(const ExtremalSchedule& s);

struct ExtremalVerification {
  ZeroCensus census;
  // max over seeds of |P(z)| / (|a_k| |z|^k) at the converged zero, with k
  // the seed's stage (0 contributes 0: P vanishes there exactly).
  double max_relative_residual = 0.0;
};

// Newton from every truncation seed, census + index certification against
// the boundary winding on |z| = r_n (index sum is +n for even n, -n odd).
ExtremalVerification verify_extremal(const ExtremalSchedule& s,
                                     int threads = 1);

}  // namespace polyzero

#endif
