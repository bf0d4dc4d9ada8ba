#include "polyzero/winding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace polyzero {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
}  // namespace

Curve Curve::circle(Complex center, double radius, Orientation o) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("circle radius must be positive");
  Curve c;
  c.circle_ = true;
  c.center_ = center;
  c.radius_ = radius;
  c.orient_ = o;
  return c;
}

Curve Curve::closed_polyline(std::vector<Complex> vertices, Orientation o) {
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] != vertices[(i + 1) % vertices.size()]) ++distinct;
  if (vertices.size() < 3 || distinct < 3)
    throw std::invalid_argument("polyline needs at least 3 distinct vertices");
  Curve c;
  c.circle_ = false;
  c.verts_ = std::move(vertices);
  c.orient_ = o;
  c.cumlen_.assign(c.verts_.size() + 1, 0.0);
  for (std::size_t i = 0; i < c.verts_.size(); ++i) {
    const Complex a = c.verts_[i];
    const Complex b = c.verts_[(i + 1) % c.verts_.size()];
    c.cumlen_[i + 1] = c.cumlen_[i] + std::abs(b - a);
  }
  if (!(c.cumlen_.back() > 0.0))
    throw std::invalid_argument("degenerate polyline");
  return c;
}

Complex Curve::point(double t) const {
  if (orient_ == Orientation::Negative) t = 1.0 - t;
  if (circle_) {
    const double th = kTwoPi * t;
    return center_ + radius_ * Complex{std::cos(th), std::sin(th)};
  }
  const double target = std::clamp(t, 0.0, 1.0) * cumlen_.back();
  auto it = std::upper_bound(cumlen_.begin(), cumlen_.end(), target);
  std::size_t seg = it == cumlen_.begin()
                        ? 0
                        : static_cast<std::size_t>(it - cumlen_.begin()) - 1;
  seg = std::min(seg, verts_.size() - 1);
  const double len = cumlen_[seg + 1] - cumlen_[seg];
  const double u = len > 0.0 ? (target - cumlen_[seg]) / len : 0.0;
  const Complex a = verts_[seg];
  const Complex b = verts_[(seg + 1) % verts_.size()];
  return a + u * (b - a);
}

double Curve::extent() const {
  if (circle_) return std::abs(center_) + radius_;
  double m = 0.0;
  for (const Complex& v : verts_) m = std::max(m, std::abs(v));
  return m;
}

double default_safety_tol(const PolyPoly& p, const Curve& curve) {
  // Largest single term magnitude on the curve; the coarser bound
  // maxcoeff * r^degree over-rejects polynomials whose top coefficient
  // is many orders below the largest one.
  const double r = std::max(curve.extent(), 1.0);
  double scale = 0.0;
  for (const auto& t : p.terms())
    scale = std::max(scale, std::abs(t.coeff) * std::pow(r, t.j + t.k));
  return 1e-13 * std::max(1.0, scale);
}

namespace {

struct Accumulator {
  const PolyPoly& p;
  const Curve& curve;
  double safety;
  int max_depth;
  double total = 0.0;
  double min_mod = std::numeric_limits<double>::infinity();
  long long samples = 0;

  // Returns w/|w|: only the phase feeds the continuation, and normalizing
  // keeps later products of samples inside double range no matter how
  // large |P| gets on the curve.
  Complex probe(double t) {
    const Complex w = eval(p, curve.point(t));
    const double m = std::abs(w);
    ++samples;
    if (!std::isfinite(m))
      throw CertificationError("cannot certify winding: evaluation overflow on curve");
    min_mod = std::min(min_mod, m);
    if (m < safety) throw ZeroOnCurveError("zero on curve within safety tolerance");
    return w / m;
  }

  // Phase change along [t0, t1]; bisect whenever a single step would turn
  // by more than pi/2, so the continuation stays unambiguous.
  double segment(double t0, Complex w0, double t1, Complex w1, int depth) {
    const double d = std::arg(w1 * std::conj(w0));
    if (std::fabs(d) <= kHalfPi) return d;
    if (depth >= max_depth)
      throw CertificationError("cannot certify winding: refinement exhausted");
    const double tm = 0.5 * (t0 + t1);
    const Complex wm = probe(tm);
    return segment(t0, w0, tm, wm, depth + 1) + segment(tm, wm, t1, w1, depth + 1);
  }
};

}  // namespace

WindingResult winding(const PolyPoly& p, const Curve& curve, double safety_tol,
                      const WindingOptions& opt) {
  if (opt.initial_samples < 8) throw std::invalid_argument("too few samples");
  const double safety =
      safety_tol > 0.0 ? safety_tol : default_safety_tol(p, curve);
  Accumulator acc{p, curve, safety, opt.max_depth};

  const int n = opt.initial_samples;
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    w[static_cast<std::size_t>(i)] = acc.probe(static_cast<double>(i) / n);
  for (int i = 0; i < n; ++i) {
    const double t0 = static_cast<double>(i) / n;
    const double t1 = static_cast<double>(i + 1) / n;
    const Complex w0 = w[static_cast<std::size_t>(i)];
    const Complex w1 = w[static_cast<std::size_t>((i + 1) % n)];
    acc.total += acc.segment(t0, w0, t1, w1, 0);
  }

  const double turns = acc.total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::fabs(turns - rounded) > opt.integer_tol)
    throw CertificationError("cannot certify winding: non-integer turn count");
  WindingResult res;
  res.wind = static_cast<int>(rounded);
  res.min_modulus = acc.min_mod;
  res.samples = acc.samples;
  return res;
}

int zero_index(const PolyPoly& p, Complex z0, double radius_hint) {
  if (!(radius_hint > 0.0) || !std::isfinite(radius_hint))
    throw std::invalid_argument("radius hint must be positive");
  double r = radius_hint;
  for (int attempt = 0; attempt < 20; ++attempt) {
    try {
      return winding(p, Curve::circle(z0, r)).wind;
    } catch (const ZeroOnCurveError&) {
      r *= 0.5;
    }
  }
  throw std::domain_error("nonisolated or clustered zero");
}

int winding_annulus(const PolyPoly& p, double r_inner, double r_outer) {
  if (!(0.0 < r_inner && r_inner < r_outer))
    throw std::invalid_argument("need 0 < r_inner < r_outer");
  const int outer = winding(p, Curve::circle({0.0, 0.0}, r_outer)).wind;
  const int inner = winding(p, Curve::circle({0.0, 0.0}, r_inner)).wind;
  return outer - inner;
}

}  // namespace polyzero
