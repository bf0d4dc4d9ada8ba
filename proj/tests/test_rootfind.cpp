#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <polyzero/polypoly.hpp>
#include <polyzero/rootfind.hpp>

using polyzero::Complex;
using polyzero::NewtonOptions;
using polyzero::PolyPoly;

namespace {

PolyPoly make(std::initializer_list<PolyPoly::Term> ts) {
  int n = 0;
  for (const auto& t : ts) n = std::max(n, t.j + t.k);
  return PolyPoly(n, std::span<const PolyPoly::Term>(ts.begin(), ts.size()));
}

bool census_has(const polyzero::ZeroCensus& census, Complex z, double tol) {
  return std::any_of(census.zeros.begin(), census.zeros.end(),
                     [&](const polyzero::CensusZero& c) {
                       return std::abs(c.z - z) <= tol;
                     });
}

}  // namespace

TEST_CASE("newton_step equals the analytic step when deg_zbar = 0") {
  // P = z^3 - 2z + 2 (analytic): the update must be exactly -P/P'.
  const auto p = make({{3, 0, 1.0}, {1, 0, -2.0}, {0, 0, 2.0}});
  const auto dp = polyzero::wirtinger(p, polyzero::Wirtinger::dz);
  for (const Complex z : {Complex{1.5, 0.25}, Complex{-2.0, 1.0}}) {
    const Complex delta = polyzero::newton_step(p, z) - z;
    const Complex classical = -polyzero::eval(p, z) / polyzero::eval(dp, z);
    CHECK(std::abs(delta - classical) <=
          1e-14 * std::max(1.0, std::abs(classical)));
  }
}

TEST_CASE("newton_step throws on a degenerate Jacobian") {
  // z zbar has J = |zbar|^2 - |z|^2 = 0 everywhere.
  const auto p = make({{1, 1, 1.0}, {0, 0, 1.0}});
  CHECK_THROWS_AS(polyzero::newton_step(p, Complex{1.0, 1.0}),
                  polyzero::SingularPointError);
}

TEST_CASE("newton converges to a simple zero") {
  const auto p = make({{2, 0, 1.0}, {1, 0, 1.0}, {0, 1, 1.0}, {0, 0, 2.0}});
  const auto r = polyzero::newton(p, Complex{0.3, 1.0});
  CHECK(r.converged);
  CHECK(std::abs(r.z - Complex{0.0, std::sqrt(2.0)}) <= 1e-9);
  CHECK(r.residual <= 1e-12 * 4.0);
  CHECK(r.jacobian_sign == 1);
}

TEST_CASE("zero residual counts as converged regardless of scale") {
  const auto p = make({{1, 0, 1.0}});
  const auto r = polyzero::newton(p, Complex{0.0, 0.0});
  CHECK(r.converged);
  CHECK(r.residual == 0.0);
}

TEST_CASE("polish never increases the residual") {
  const auto p = make({{5, 0, 1.0}, {0, 4, 2.0}});
  const auto raw = polyzero::newton(p, Complex{0.05, 0.02});
  const auto polished = polyzero::polish_root(p, raw);
  // Both sides measured with the compensated evaluator polish uses.
  CHECK(polished.residual <= std::abs(polyzero::eval_compensated(p, raw.z)));
}

TEST_CASE("atlas census for z^2 + z + zbar + 1") {
  const auto p = make({{2, 0, 1.0}, {1, 0, 1.0}, {0, 1, 1.0}, {0, 0, 1.0}});
  const auto census = polyzero::zero_atlas(p, 3.0);
  REQUIRE(census.zeros.size() == 3);
  CHECK(census.certified);
  CHECK(census.total_winding == 2);
  CHECK(census_has(census, Complex{-1.0, 0.0}, 1e-9));
  CHECK(census_has(census, Complex{0.0, 1.0}, 1e-9));
  CHECK(census_has(census, Complex{0.0, -1.0}, 1e-9));
  for (const auto& z : census.zeros) {
    if (std::abs(z.z - Complex{-1.0, 0.0}) < 1e-6)
      CHECK(z.index == 0);
    else
      CHECK(z.index == 1);
  }
}

TEST_CASE("atlas census for z^2 + z + zbar + 2") {
  const auto p = make({{2, 0, 1.0}, {1, 0, 1.0}, {0, 1, 1.0}, {0, 0, 2.0}});
  const auto census = polyzero::zero_atlas(p, 3.0);
  REQUIRE(census.zeros.size() == 2);
  CHECK(census.certified);
  const double s = std::sqrt(2.0);
  CHECK(census_has(census, Complex{0.0, s}, 1e-9));
  CHECK(census_has(census, Complex{0.0, -s}, 1e-9));
  for (const auto& z : census.zeros) CHECK(z.index == 1);
}

TEST_CASE("census zeros are sorted and deduplicated") {
  const auto p = make({{2, 0, 1.0}, {0, 0, -1.0}});  // z^2 - 1
  std::vector<Complex> dup_seeds{{1.0, 0.0}, {1.0, 1e-12}, {-1.0, 0.0}};
  const auto census = polyzero::zero_atlas(p, 2.0, {}, dup_seeds);
  REQUIRE(census.zeros.size() == 2);
  CHECK(census.zeros[0].z.real() < census.zeros[1].z.real());
}

TEST_CASE("atlas is deterministic and thread-count independent") {
  const auto p = make({{3, 0, 1.0}, {0, 1, 0.5}, {0, 0, 0.25}});
  const auto a = polyzero::zero_atlas(p, 2.0);
  polyzero::AtlasOptions opt;
  opt.threads = 4;
  const auto b = polyzero::zero_atlas(p, 2.0, opt);
  REQUIRE(a.zeros.size() == b.zeros.size());
  for (std::size_t i = 0; i < a.zeros.size(); ++i) {
    CHECK(a.zeros[i].z == b.zeros[i].z);
    CHECK(a.zeros[i].index == b.zeros[i].index);
  }
}

TEST_CASE("singular zero of z^n + 2 zbar^(n-1) is collapsed and indexed") {
  // The origin has J = 0; Newton converges only linearly there, and the
  // census must still report a single zero with index -(n-1).
  for (int n = 3; n <= 4; ++n) {
    const auto p = make({{n, 0, 1.0}, {0, n - 1, 2.0}});
    const auto census = polyzero::zero_atlas(p, 3.0);
    CHECK(census.certified);
    // 2n-1 ring zeros at |z| = 2 plus the origin.
    CHECK(census.zeros.size() == static_cast<std::size_t>(2 * n));
    bool found_origin = false;
    for (const auto& z : census.zeros)
      if (std::abs(z.z) < 1e-6) {
        found_origin = true;
        CHECK(z.index == -(n - 1));
      }
    CHECK(found_origin);
  }
}

TEST_CASE("atlas rejects bad inputs") {
  const auto p = make({{1, 0, 1.0}});
  CHECK_THROWS_AS(polyzero::zero_atlas(p, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(polyzero::zero_atlas(PolyPoly{}, 1.0), std::domain_error);
}

TEST_CASE("constant polynomials have an empty certified census") {
  const auto census = polyzero::zero_atlas(PolyPoly::constant(3.0), 2.0);
  CHECK(census.zeros.empty());
  CHECK(census.certified);
  CHECK(census.total_winding == 0);
}
