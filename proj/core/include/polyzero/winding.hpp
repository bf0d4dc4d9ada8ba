#ifndef POLYZERO_WINDING_HPP
#define POLYZERO_WINDING_HPP

#include <stdexcept>
#include <vector>

#include "polyzero/polypoly.hpp"

namespace polyzero {

enum class Orientation { Positive, Negative };

// A closed curve: either a circle or a closed polyline, parametrized over
// [0, 1].  Negative orientation traverses the same trace backwards.
class Curve {
 public:
  static Curve circle(Complex center, double radius,
                      Orientation o = Orientation::Positive);
  // Vertices of a closed loop; the closing edge back to the first vertex is
  // implicit.  At least three distinct vertices are required.
  static Curve closed_polyline(std::vector<Complex> vertices,
                               Orientation o = Orientation::Positive);

  Complex point(double t) const;
  bool is_circle() const { return circle_; }
  Complex center() const { return center_; }
  double radius() const { return radius_; }
  // Largest |z| on the curve, used to scale the default safety tolerance.
  double extent() const;

 private:
  Curve() = default;
  bool circle_ = true;
  Complex center_{0.0, 0.0};
  double radius_ = 1.0;
  std::vector<Complex> verts_;
  std::vector<double> cumlen_;
  Orientation orient_ = Orientation::Positive;
};

struct WindingResult {
  int wind = 0;
  double min_modulus = 0.0;
  long long samples = 0;
};

struct ZeroOnCurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindingOptions {
  int initial_samples = 256;
  int max_depth = 24;
  double integer_tol = 1e-6;
};

double default_safety_tol(const PolyPoly& p, const Curve& curve);

/* Winding number of t -> P(curve(t)) around 0 by argument continuation.
   Phase increments above pi/2 trigger adaptive bisection of the parameter
   interval.  Throws ZeroOnCurveError if |P| falls below safety_tol at any
   sample and CertificationError if the refinement depth is exhausted or the
   accumulated phase is not an integer multiple of 2*pi within integer_tol.
   safety_tol <= 0 selects the default tolerance. */
WindingResult winding(const PolyPoly& p, const Curve& curve,
                      double safety_tol = 0.0, const WindingOptions& opt = {});

// Index (local winding) of an isolated zero z0: winding on a circle of
// radius radius_hint, halving the radius up to 20 times when the circle
// hits a near-zero of P.  The caller guarantees no other zero lies within
// 2 * radius_hint.
int zero_index(const PolyPoly& p, Complex z0, double radius_hint);

// Winding of the annulus boundary r_inner < |z| < r_outer (region kept to
// the left): winding on the outer circle minus winding on the inner one.
int winding_annulus(const PolyPoly& p, double r_inner, double r_outer);

}  // namespace polyzero

#endif
