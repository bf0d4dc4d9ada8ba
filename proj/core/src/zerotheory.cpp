#include "polyzero/zerotheory.hpp"

#include <cmath>
#include <stdexcept>

#include "polyzero/extremal.hpp"

namespace polyzero {

namespace {

// Relative guard band so that exact ties never count as strict inequalities.
constexpr double kGuard = 1e-12;

struct TopDominance {
  int ell;
  double top_mag;
  double surplus;
};

std::optional<TopDominance> top_dominance(const PolyPoly& p) {
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
  if (ell < 0) return std::nullopt;
  const double surplus = best - (total - best);
  if (surplus <= kGuard * best) return std::nullopt;
  return TopDominance{ell, best, surplus};
}

}  // namespace

bool balk_existence(const PolyPoly& p) {
  const DegreeTriple d = degrees(p);
  if (d.zero_polynomial()) return false;
  return d.degree > 2 * d.analytic || d.degree > 2 * d.anti_analytic;
}

std::optional<int> dominant_existence(const PolyPoly& p) {
  const auto dom = top_dominance(p);
  if (!dom) return std::nullopt;
  if (2 * dom->ell == p.degree_bound()) return std::nullopt;
  return dom->ell;
}

ExistenceVerdict existence_verdict(const PolyPoly& p) {
  ExistenceVerdict v;
  v.balk = balk_existence(p);
  v.dominant_ell = dominant_existence(p);
  v.guaranteed = v.balk || v.dominant_ell.has_value();
  return v;
}

FinitenessCertificate finiteness_certificate(const PolyPoly& p,
                                             bool irreducible_hint) {
  FinitenessCertificate cert;
  if (p.is_zero()) return cert;
  const int n = p.degree_bound();

  int top_terms = 0, top_j = -1;
  for (int j = 0; j <= n; ++j)
    if (p.coeff(j, n - j) != Complex{0.0, 0.0}) {
      ++top_terms;
      top_j = j;
    }
  if (top_terms == 1 && top_j == n) {
    cert.kind = FinitenessKind::MonicInZ;
    return cert;
  }
  if (top_terms == 1 && top_j == 0) {
    cert.kind = FinitenessKind::MonicInZbar;
    return cert;
  }

  if (auto lam = self_conjugate_lambda(p)) {
    cert.kind = FinitenessKind::SelfConjugate;
    cert.lambda = lam;
    return cert;
  }

  if (irreducible_hint) {
    const double big = p.max_coeff_magnitude();
    for (int d = 0; d <= n; ++d)
      for (int j = 0; j <= d; ++j) {
        const int k = d - j;
        if (j == k) continue;
        const double a = std::abs(p.coeff(j, k));
        const double b = std::abs(p.coeff(k, j));
        if (std::fabs(a - b) > kGuard * big) {
          cert.kind = FinitenessKind::AsymmetricCoefficient;
          cert.witness_index = std::make_pair(j, k);
          return cert;
        }
      }
  }
  return cert;
}

long long max_zero_bound(const PolyPoly& p, bool irreducible_hint) {
  const auto cert = finiteness_certificate(p, irreducible_hint);
  switch (cert.kind) {
    case FinitenessKind::MonicInZ:
    case FinitenessKind::MonicInZbar:
    case FinitenessKind::AsymmetricCoefficient: {
      const long long n = p.degree_bound();
      return n * n;
    }
    default:
      throw std::domain_error("finiteness not established");
  }
}

bool irreducibility_certificate(int n, long long verified_zero_count) {
  if (n < 2) throw std::invalid_argument("degree must be >= 2");
  const long long threshold = static_cast<long long>(n) * n - 2LL * n + 3LL;
  return verified_zero_count >= threshold;
}

PolyPoly poly_with_k_zeros(int n, long long k) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  const long long nn = static_cast<long long>(n) * n;
  const PolyPoly z = PolyPoly::var_z();
  const PolyPoly zb = PolyPoly::var_zbar();
  const PolyPoly one = PolyPoly::constant(1.0);
  const PolyPoly wedge = z - zb - one;  // z - zbar - 1, never zero
  if (k == kInfinitelyManyZeros)
    return PolyPoly::monomial(n, 0, 1.0) - PolyPoly::monomial(0, n, 1.0);
  if (k < 0) throw std::invalid_argument("zero count must be >= 0");
  if (k == 0) return pow(wedge, n);
  if (k <= n)
    return multiply(PolyPoly::monomial(static_cast<int>(k), 0, 1.0) - one,
                    pow(wedge, n - static_cast<int>(k)));
  if (k == nn) return extremal_poly(extremal_coefficients(n));
  throw std::domain_error("unsupported mid-range count");
}

}  // namespace polyzero
