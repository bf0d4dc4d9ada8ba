#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <polyzero/polypoly.hpp>
#include <polyzero/rootfind.hpp>
#include <polyzero/zerotheory.hpp>

using polyzero::Complex;
using polyzero::FinitenessKind;
using polyzero::PolyPoly;

namespace {

PolyPoly make(std::initializer_list<PolyPoly::Term> ts) {
  int n = 0;
  for (const auto& t : ts) n = std::max(n, t.j + t.k);
  return PolyPoly(n, std::span<const PolyPoly::Term>(ts.begin(), ts.size()));
}

}  // namespace

TEST_CASE("balk existence") {
  CHECK(polyzero::balk_existence(make({{5, 0, 1.0}, {0, 1, 2.0}})));
  CHECK(polyzero::balk_existence(make({{0, 5, 1.0}, {1, 0, 2.0}})));
  // degree 4 with deg_z 3, deg_zbar 2: neither inequality is strict.
  CHECK(!polyzero::balk_existence(make({{3, 0, 1.0}, {2, 2, 1.0}})));
  // analytic polynomials of degree >= 1 always qualify.
  CHECK(polyzero::balk_existence(make({{1, 0, 1.0}, {0, 0, 5.0}})));
  CHECK(polyzero::balk_existence(make({{7, 0, 1.0}})));
}

TEST_CASE("dominant top coefficient existence") {
  SUBCASE("dominant with 2l != n gives the top index") {
    const auto ell = polyzero::dominant_existence(
        make({{2, 0, 3.0}, {1, 1, 1.0}, {0, 2, 1.0}, {0, 0, 9.0}}));
    REQUIRE(ell.has_value());
    CHECK(*ell == 2);
  }
  SUBCASE("2l == n is excluded") {
    CHECK(!polyzero::dominant_existence(make({{1, 1, 5.0}, {2, 0, 1.0}})
                                        ).has_value());
  }
  SUBCASE("a tie is not dominance") {
    CHECK(!polyzero::dominant_existence(make({{2, 0, 1.0}, {0, 2, 1.0}}))
               .has_value());
  }
  SUBCASE("analytic polynomials are always dominant at l = n") {
    const auto ell = polyzero::dominant_existence(make({{3, 0, 0.5}, {1, 0, 9.0}}));
    REQUIRE(ell.has_value());
    CHECK(*ell == 3);
  }
}

TEST_CASE("existence verdict combines both theorems") {
  const auto v = polyzero::existence_verdict(make({{2, 0, 1.0}, {1, 0, 1.0},
                                                   {0, 1, 1.0}, {0, 0, 1.0}}));
  CHECK(!v.balk);
  REQUIRE(v.dominant_ell.has_value());
  CHECK(*v.dominant_ell == 2);
  CHECK(v.guaranteed);
}

TEST_CASE("finiteness certificates") {
  SUBCASE("monic in z") {
    const auto c = polyzero::finiteness_certificate(
        make({{2, 0, 1.0}, {0, 1, 1.0}, {0, 0, 1.0}}), false);
    CHECK(c.kind == FinitenessKind::MonicInZ);
  }
  SUBCASE("two terms in the top stratum block the monic certificates") {
    const auto c = polyzero::finiteness_certificate(
        make({{2, 0, 1.0}, {1, 1, 1.0}, {0, 0, 1.0}}), false);
    CHECK(c.kind == FinitenessKind::Inconclusive);
  }
  SUBCASE("monic in zbar") {
    const auto c = polyzero::finiteness_certificate(
        make({{0, 3, 2.0}, {1, 1, 1.0}}), false);
    CHECK(c.kind == FinitenessKind::MonicInZbar);
  }
  SUBCASE("self-conjugate wins over asymmetric when both rows are mirrors") {
    const auto c = polyzero::finiteness_certificate(
        make({{1, 0, 1.0}, {0, 1, -1.0}}), true);
    CHECK(c.kind == FinitenessKind::SelfConjugate);
    REQUIRE(c.lambda.has_value());
    CHECK(std::abs(*c.lambda - Complex{-1.0, 0.0}) <= 1e-12);
    CHECK(std::abs(std::abs(*c.lambda) - 1.0) <= 1e-12);
  }
  SUBCASE("asymmetric coefficient requires the irreducibility hint") {
    const auto p = make({{2, 0, 1.0}, {0, 2, 2.0}, {1, 0, 1.0}});
    CHECK(polyzero::finiteness_certificate(p, false).kind ==
          FinitenessKind::Inconclusive);
    const auto c = polyzero::finiteness_certificate(p, true);
    CHECK(c.kind == FinitenessKind::AsymmetricCoefficient);
    REQUIRE(c.witness_index.has_value());
    const auto [wj, wk] = *c.witness_index;
    CHECK(std::abs(std::abs(p.coeff(wj, wk)) - std::abs(p.coeff(wk, wj))) >
          0.0);
  }
}

TEST_CASE("max zero bound is n^2 or an error") {
  CHECK(polyzero::max_zero_bound(make({{2, 0, 1.0}, {0, 1, 1.0}})) == 4);
  CHECK(polyzero::max_zero_bound(make({{0, 3, 1.0}, {1, 0, 1.0}})) == 9);
  CHECK_THROWS_AS(
      polyzero::max_zero_bound(make({{1, 0, 1.0}, {0, 1, -1.0}})),
      std::domain_error);
  CHECK_THROWS_AS(
      polyzero::max_zero_bound(make({{2, 0, 1.0}, {0, 2, 2.0}}), false),
      std::domain_error);
}

TEST_CASE("irreducibility certificate threshold is n^2 - 2n + 3") {
  CHECK(polyzero::irreducibility_certificate(2, 3));
  CHECK(!polyzero::irreducibility_certificate(2, 2));
  CHECK(polyzero::irreducibility_certificate(4, 11));
  CHECK(!polyzero::irreducibility_certificate(4, 10));
  CHECK_THROWS_AS(polyzero::irreducibility_certificate(1, 1),
                  std::invalid_argument);
}

TEST_CASE("poly_with_k_zeros realizes the advertised counts") {
  SUBCASE("k = 0: no zeros at all") {
    const auto p = polyzero::poly_with_k_zeros(3, 0);
    const auto atlas = polyzero::zero_atlas(p, 5.0);
    CHECK(atlas.certified);
    CHECK(atlas.zeros.empty());
  }
  SUBCASE("1 <= k <= n: exactly the k-th roots of unity") {
    for (long long k = 1; k <= 3; ++k) {
      const auto p = polyzero::poly_with_k_zeros(3, k);
      const auto atlas = polyzero::zero_atlas(p, 5.0);
      CHECK(atlas.certified);
      CHECK(atlas.zeros.size() == static_cast<std::size_t>(k));
      for (const auto& z : atlas.zeros)
        CHECK(std::abs(std::abs(z.z) - 1.0) <= 1e-9);
    }
  }
  SUBCASE("k = n^2 delegates to the extremal construction") {
    const auto p = polyzero::poly_with_k_zeros(2, 4);
    const auto d = polyzero::degrees(p);
    CHECK(d.degree == 2);
  }
  SUBCASE("k = infinity: self-conjugate witness") {
    const auto p = polyzero::poly_with_k_zeros(
        3, polyzero::kInfinitelyManyZeros);
    const auto c = polyzero::finiteness_certificate(p, false);
    CHECK(c.kind == FinitenessKind::SelfConjugate);
    REQUIRE(c.lambda.has_value());
    CHECK(std::abs(std::abs(*c.lambda) - 1.0) <= 1e-12);
  }
  SUBCASE("mid-range counts are refused") {
    CHECK_THROWS_AS(polyzero::poly_with_k_zeros(4, 7), std::domain_error);
    CHECK_THROWS_AS(polyzero::poly_with_k_zeros(3, 5), std::domain_error);
  }
  SUBCASE("invalid counts are refused") {
    CHECK_THROWS_AS(polyzero::poly_with_k_zeros(3, -2), std::invalid_argument);
    CHECK_THROWS_AS(polyzero::poly_with_k_zeros(0, 0), std::invalid_argument);
  }
}
