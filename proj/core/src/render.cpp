#include "polyzero/render.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "polyzero/parallel.hpp"

namespace polyzero {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint8_t channel(double v) {
  return static_cast<std::uint8_t>(std::lround(255.0 * v));
}

bool finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace

Rgb phase_color(Complex w, int jac_sign) {
  if (w == Complex{0.0, 0.0}) return {0, 0, 0};
  const double value = jac_sign < 0 ? 0.55 : 1.0;
  double phi = std::arg(w);
  if (phi < 0.0) phi += kTwoPi;
  double h6 = phi / kTwoPi * 6.0;
  if (h6 >= 6.0) h6 = 0.0;
  const int sector = static_cast<int>(h6);
  const double x = value * (1.0 - std::fabs(std::fmod(h6, 2.0) - 1.0));
  const auto C = channel(value);
  const auto X = channel(x);
  switch (sector) {
    case 0: return {C, X, 0};
    case 1: return {X, C, 0};
    case 2: return {0, C, X};
    case 3: return {0, X, C};
    case 4: return {X, 0, C};
    default: return {C, 0, X};
  }
}

PhaseImage render_phase(const PolyPoly& p, const Window& window, int width,
                        int height, Premap premap, int threads) {
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("image dimensions must be positive");
  if (!(window.re_min < window.re_max) || !(window.im_min < window.im_max) ||
      !std::isfinite(window.re_min) || !std::isfinite(window.re_max) ||
      !std::isfinite(window.im_min) || !std::isfinite(window.im_max))
    throw std::invalid_argument("invalid window");

  PhaseImage img;
  img.width = width;
  img.height = height;
  img.window = window;
  img.pixels.assign(3 * static_cast<std::size_t>(width) *
                        static_cast<std::size_t>(height),
                    0);
  const double dx = (window.re_max - window.re_min) / width;
  const double dy = (window.im_max - window.im_min) / height;

  const PolyPoly pz = wirtinger(p, Wirtinger::dz);
  const PolyPoly pzb = wirtinger(p, Wirtinger::dzbar);

  std::vector<long long> overflow(static_cast<std::size_t>(height), 0);
  parallel_for(static_cast<std::size_t>(height), threads, [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    const double y = window.im_max - (j + 0.5) * dy;
    for (int i = 0; i < width; ++i) {
      const double x = window.re_min + (i + 0.5) * dx;
      Complex zeta{x, y};
      if (premap == Premap::Contraction) {
        const double r2 = x * x + y * y;
        zeta *= std::exp(r2);
      }
      Rgb c;
      if (!finite(zeta)) {
        c = {255, 255, 255};
        ++overflow[jj];
      } else {
        const Complex w = eval(p, zeta);
        if (!finite(w)) {
          c = {255, 255, 255};
          ++overflow[jj];
        } else {
          const double jac =
              std::norm(eval(pz, zeta)) - std::norm(eval(pzb, zeta));
          c = phase_color(w, jac < 0.0 ? -1 : 1);
        }
      }
      const std::size_t o =
          3 * (jj * static_cast<std::size_t>(width) + static_cast<std::size_t>(i));
      img.pixels[o] = c.r;
      img.pixels[o + 1] = c.g;
      img.pixels[o + 2] = c.b;
    }
  });
  for (long long v : overflow) img.overflow_pixels += v;
  return img;
}

void draw_zero_marks(PhaseImage& img, std::span<const Complex> zeros) {
  const double dx = (img.window.re_max - img.window.re_min) / img.width;
  const double dy = (img.window.im_max - img.window.im_min) / img.height;
  const int rad = std::max(2, static_cast<int>(std::lround(0.004 * img.width)));
  for (const Complex& z : zeros) {
    const int ci = static_cast<int>(
        std::lround((z.real() - img.window.re_min) / dx - 0.5));
    const int cj = static_cast<int>(
        std::lround((img.window.im_max - z.imag()) / dy - 0.5));
    for (int j = cj - rad; j <= cj + rad; ++j) {
      if (j < 0 || j >= img.height) continue;
      for (int i = ci - rad; i <= ci + rad; ++i) {
        if (i < 0 || i >= img.width) continue;
        if ((i - ci) * (i - ci) + (j - cj) * (j - cj) > rad * rad) continue;
        const std::size_t o = 3 * (static_cast<std::size_t>(j) * img.width +
                                   static_cast<std::size_t>(i));
        img.pixels[o] = img.pixels[o + 1] = img.pixels[o + 2] = 0;
      }
    }
  }
}

void write_ppm(const PhaseImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

PhaseImage read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (magic != "P6" || w <= 0 || h <= 0 || maxval != 255)
    throw std::runtime_error("unsupported PPM in " + path.string());
  in.get();  // single whitespace after the header
  PhaseImage img;
  img.width = w;
  img.height = h;
  img.pixels.resize(3 * static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
    throw std::runtime_error("truncated PPM in " + path.string());
  return img;
}

}  // namespace polyzero
