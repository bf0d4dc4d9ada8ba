#ifndef POLYZERO_ZEROTHEORY_HPP
#define POLYZERO_ZEROTHEORY_HPP

#include <optional>
#include <utility>

#include "polyzero/polypoly.hpp"

namespace polyzero {

// Degree-gap test: a zero exists whenever deg > 2*deg_z or deg > 2*deg_zbar.
bool balk_existence(const PolyPoly& p);

// Index ell of a strictly dominant top-degree coefficient with 2*ell != n.
// When present, a zero exists and the winding on every large circle is
// 2*ell - n.
std::optional<int> dominant_existence(const PolyPoly& p);

struct ExistenceVerdict {
  bool balk = false;
  std::optional<int> dominant_ell;
  bool guaranteed = false;
};

ExistenceVerdict existence_verdict(const PolyPoly& p);

enum class FinitenessKind {
  MonicInZ,
  MonicInZbar,
  AsymmetricCoefficient,
  SelfConjugate,  // lambda*conj(P) = P: a rotated real-valued polynomial;
                  // the finite n^2 bound does not apply
  Inconclusive,
};

struct FinitenessCertificate {
  FinitenessKind kind = FinitenessKind::Inconclusive;
  std::optional<std::pair<int, int>> witness_index;  // asymmetric pair (j, k)
  std::optional<Complex> lambda;                     // self-conjugacy factor
};

// The AsymmetricCoefficient branch is only sound for irreducible P, which
// cannot be decided numerically; the caller vouches via irreducible_hint.
FinitenessCertificate finiteness_certificate(const PolyPoly& p,
                                             bool irreducible_hint = false);

// deg(P)^2 once a finite-zero-set certificate is established; throws
// std::domain_error otherwise.
long long max_zero_bound(const PolyPoly& p, bool irreducible_hint = false);

// True when a verified count of distinct zeros already exceeds what any
// reducible degree-n polynomial could have (count >= n^2 - 2n + 3).
bool irreducibility_certificate(int n, long long verified_zero_count);

inline constexpr long long kInfinitelyManyZeros = -1;

// A degree-n polynomial with exactly k zeros, for k in {0, ..., n},
// k == n^2, or k == kInfinitelyManyZeros.  Counts strictly between n and
// n^2 are not covered by the construction and are rejected.
PolyPoly poly_with_k_zeros(int n, long long k);

}  // namespace polyzero

#endif
