#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>
#include <vector>

#include <polyzero/polypoly.hpp>
#include <polyzero/render.hpp>

using polyzero::Complex;
using polyzero::PhaseImage;
using polyzero::PolyPoly;
using polyzero::Rgb;
using polyzero::Window;

namespace {

PolyPoly make(std::initializer_list<PolyPoly::Term> ts) {
  int n = 0;
  for (const auto& t : ts) n = std::max(n, t.j + t.k);
  return PolyPoly(n, std::span<const PolyPoly::Term>(ts.begin(), ts.size()));
}

Rgb gbswap(Rgb c) { return {c.r, c.b, c.g}; }

bool near_rgb(Rgb a, Rgb b, int tol) {
  return std::abs(int(a.r) - int(b.r)) <= tol &&
         std::abs(int(a.g) - int(b.g)) <= tol &&
         std::abs(int(a.b) - int(b.b)) <= tol;
}

// Hue angle recovered from a rendered pixel, in (-pi, pi].
double pixel_hue(Rgb c) {
  const double r = c.r, g = c.g, b = c.b;
  return std::atan2(std::sqrt(3.0) * (g - b), 2.0 * r - g - b);
}

}  // namespace

TEST_CASE("phase_color pins") {
  CHECK(polyzero::phase_color({1.0, 0.0}, 1) == Rgb{255, 0, 0});
  CHECK(polyzero::phase_color({1.0, 0.0}, 0) == Rgb{255, 0, 0});
  CHECK(polyzero::phase_color({1.0, 0.0}, -1) == Rgb{140, 0, 0});
  CHECK(polyzero::phase_color({0.0, 0.0}, 1) == Rgb{0, 0, 0});
  CHECK(polyzero::phase_color({0.0, 0.0}, -1) == Rgb{0, 0, 0});
  // Quarter turns land mid-sector or on sector seams.
  CHECK(polyzero::phase_color({0.0, 1.0}, 1) == Rgb{128, 255, 0});
  CHECK(polyzero::phase_color({-1.0, 0.0}, 1) == Rgb{0, 255, 255});
  CHECK(polyzero::phase_color({0.0, -1.0}, 1) == Rgb{128, 0, 255});
  // Magnitude does not matter, only the argument.
  CHECK(polyzero::phase_color({1e300, 0.0}, 1) == Rgb{255, 0, 0});
  CHECK(polyzero::phase_color({1e-300, 0.0}, 1) == Rgb{255, 0, 0});
}

TEST_CASE("conjugating the argument swaps the green and blue channels") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 20000; ++trial) {
    const Complex w{u(rng), u(rng)};
    if (w == Complex{0.0, 0.0}) continue;
    const int s = (trial % 2 == 0) ? 1 : -1;
    const Rgb a = polyzero::phase_color(std::conj(w), s);
    const Rgb b = gbswap(polyzero::phase_color(w, s));
    CHECK(near_rgb(a, b, 1));
  }
}

TEST_CASE("render maps pixel centers affinely with the top row at im_max") {
  // Identity polynomial: each pixel shows the phase of its own center.
  const auto p = make({{1, 0, 1.0}});
  const Window win{-0.5, 1.5, -0.5, 1.5};
  const auto img = polyzero::render_phase(p, win, 2, 2);
  REQUIRE(img.width == 2);
  REQUIRE(img.height == 2);
  CHECK(img.overflow_pixels == 0);
  // Centers: (0,1) (1,1) on the top row, (0,0) (1,0) below.
  CHECK(img.at(0, 1) == Rgb{0, 0, 0});           // z = 0 renders black
  CHECK(img.at(1, 1) == Rgb{255, 0, 0});         // z = 1, arg 0
  CHECK(img.at(1, 0) == polyzero::phase_color({1.0, 1.0}, 1));
  CHECK(img.at(0, 0) == polyzero::phase_color({0.0, 1.0}, 1));
}

TEST_CASE("brightness encodes the Jacobian sign") {
  const Window win{0.1, 1.1, 0.1, 1.1};
  const auto bright = polyzero::render_phase(make({{1, 0, 1.0}}), win, 4, 4);
  const auto dim = polyzero::render_phase(make({{0, 1, 1.0}}), win, 4, 4);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      const Rgb cb = bright.at(i, j);
      const Rgb cd = dim.at(i, j);
      CHECK(std::max({cb.r, cb.g, cb.b}) == 255);
      CHECK(std::max({cd.r, cd.g, cd.b}) == 140);
    }
}

TEST_CASE("coefficient conjugation flips the image vertically with hue negated") {
  const auto p = make({{3, 0, Complex{1.0, 2.0}},
                       {0, 2, Complex{0.5, -1.0}},
                       {1, 1, Complex{0.0, 0.3}},
                       {0, 0, Complex{-0.7, 0.1}}});
  std::vector<PolyPoly::Term> conj_terms;
  for (const auto& t : p.terms()) conj_terms.push_back({t.j, t.k, std::conj(t.coeff)});
  const PolyPoly q(p.degree_bound(), conj_terms);

  const int W = 32, H = 32;
  const Window win{-1.25, 1.25, -1.0, 1.0};
  const auto img_p = polyzero::render_phase(p, win, W, H);
  const auto img_q = polyzero::render_phase(q, win, W, H);
  for (int j = 0; j < H; ++j)
    for (int i = 0; i < W; ++i)
      CHECK(near_rgb(img_q.at(i, j), gbswap(img_p.at(i, H - 1 - j)), 1));
}

TEST_CASE("contraction premap tallies unrepresentable pixels as white") {
  const auto p = make({{1, 0, 1.0}, {0, 0, 1.0}});
  const Window win{-40.0, 40.0, -40.0, 40.0};
  const auto img =
      polyzero::render_phase(p, win, 8, 8, polyzero::Premap::Contraction);
  CHECK(img.overflow_pixels > 0);
  long long white = 0;
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i)
      if (img.at(i, j) == Rgb{255, 255, 255}) ++white;
  CHECK(white == img.overflow_pixels);
  // The window center survives the premap.
  CHECK(img.at(4, 4) != Rgb{255, 255, 255});
}

TEST_CASE("contraction premap keeps small windows intact") {
  const auto p = make({{2, 0, 1.0}, {0, 1, 1.0}});
  const Window win{-1.0, 1.0, -1.0, 1.0};
  const auto plain = polyzero::render_phase(p, win, 16, 16);
  const auto contracted =
      polyzero::render_phase(p, win, 16, 16, polyzero::Premap::Contraction);
  CHECK(contracted.overflow_pixels == 0);
  // The premap moves points, so images differ, but both are overflow free.
  CHECK(plain.overflow_pixels == 0);
}

TEST_CASE("rendered hue winds around a zero") {
  // z^3 + 2 zbar^2 near the origin is dominated by the anti-analytic term,
  // so a small pixel circle must accumulate -2 turns of hue.
  const auto p = make({{3, 0, 1.0}, {0, 2, 2.0}});
  const int N = 256;
  const auto img = polyzero::render_phase(p, {-1.0, 1.0, -1.0, 1.0}, N, N);
  double total = 0.0;
  double prev = 0.0;
  const int samples = 720;
  for (int s = 0; s <= samples; ++s) {
    const double th = 2.0 * std::numbers::pi * s / samples;
    const int i = static_cast<int>(std::lround((0.5 * std::cos(th) + 1.0) / 2.0 * N - 0.5));
    const int j = static_cast<int>(std::lround((1.0 - 0.5 * std::sin(th)) / 2.0 * N - 0.5));
    const double h = pixel_hue(img.at(i, j));
    if (s > 0) {
      double d = h - prev;
      while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
      while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
      total += d;
    }
    prev = h;
  }
  const double turns = total / (2.0 * std::numbers::pi);
  CHECK(turns == doctest::Approx(-2.0).epsilon(0.05));
}

TEST_CASE("zero marks paint clamped black discs") {
  const auto p = make({{1, 0, 1.0}, {0, 0, 5.0}});  // nonzero everywhere shown
  auto img = polyzero::render_phase(p, {-1.0, 1.0, -1.0, 1.0}, 64, 64);
  const std::vector<Complex> marks{{0.0, 0.0}, {50.0, 50.0}};
  polyzero::draw_zero_marks(img, marks);
  // Radius max(2, 0.4% of 64) = 2: the center pixel and its ring are black.
  CHECK(img.at(32, 32) == Rgb{0, 0, 0});
  CHECK(img.at(34, 32) == Rgb{0, 0, 0});
  CHECK(img.at(32, 30) == Rgb{0, 0, 0});
  CHECK(img.at(36, 32) != Rgb{0, 0, 0});
  // The off-window mark must be clamped away without touching the image.
  CHECK(img.at(63, 0) != Rgb{0, 0, 0});
}

TEST_CASE("ppm round trip preserves every byte") {
  const auto p = make({{2, 0, 1.0}, {0, 1, Complex{0.0, 1.0}}, {0, 0, 0.25}});
  const auto img = polyzero::render_phase(p, {-2.0, 1.0, -1.0, 1.5}, 17, 11);
  const auto path =
      std::filesystem::temp_directory_path() / "polyzero_test_roundtrip.ppm";
  polyzero::write_ppm(img, path);
  const auto back = polyzero::read_ppm(path);
  std::filesystem::remove(path);
  REQUIRE(back.width == img.width);
  REQUIRE(back.height == img.height);
  CHECK(back.pixels == img.pixels);
}

TEST_CASE("render validates dimensions and window") {
  const auto p = make({{1, 0, 1.0}});
  CHECK_THROWS_AS(polyzero::render_phase(p, {-1, 1, -1, 1}, 0, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(polyzero::render_phase(p, {-1, 1, -1, 1}, 4, -1),
                  std::invalid_argument);
  CHECK_THROWS_AS(polyzero::render_phase(p, {1, -1, -1, 1}, 4, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(polyzero::render_phase(p, {-1, 1, 2, 2}, 4, 4),
                  std::invalid_argument);
}

TEST_CASE("read_ppm rejects wrong magic and truncation") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto bad_magic = dir / "polyzero_test_badmagic.ppm";
  {
    std::FILE* f = std::fopen(bad_magic.string().c_str(), "wb");
    REQUIRE(f != nullptr);
    std::fputs("P5\n2 2\n255\n", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(polyzero::read_ppm(bad_magic), std::runtime_error);
  std::filesystem::remove(bad_magic);

  const auto truncated = dir / "polyzero_test_trunc.ppm";
  {
    std::FILE* f = std::fopen(truncated.string().c_str(), "wb");
    REQUIRE(f != nullptr);
    std::fputs("P6\n4 4\n255\nabc", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(polyzero::read_ppm(truncated), std::runtime_error);
  std::filesystem::remove(truncated);

  CHECK_THROWS_AS(polyzero::read_ppm(dir / "polyzero_no_such_file.ppm"),
                  std::runtime_error);
}

TEST_CASE("render is thread-count independent") {
  const auto p = make({{2, 0, 1.0}, {0, 1, -1.0}, {0, 0, 0.5}});
  const Window win{-2.0, 2.0, -2.0, 2.0};
  const auto a = polyzero::render_phase(p, win, 33, 21, polyzero::Premap::Identity, 1);
  const auto b = polyzero::render_phase(p, win, 33, 21, polyzero::Premap::Identity, 3);
  CHECK(a.pixels == b.pixels);
  CHECK(a.overflow_pixels == b.overflow_pixels);
}
