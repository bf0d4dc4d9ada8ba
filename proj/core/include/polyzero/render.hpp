#ifndef POLYZERO_RENDER_HPP
#define POLYZERO_RENDER_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "polyzero/polypoly.hpp"

namespace polyzero {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

/* Color for a function value: hue encodes arg(w) on the six-sector wheel
   (arg 0 maps to red, hue increases counterclockwise), full saturation;
   brightness encodes orientation, 1.0 where the Jacobian is nonnegative and
   0.55 where it is negative.  w == 0 is painted black. */
Rgb phase_color(Complex w, int jac_sign);

struct Window {
  double re_min, re_max, im_min, im_max;
};

enum class Premap {
  Identity,
  // z -> z * exp(|z|^2), a bijection of the plane used to squeeze widely
  // separated zero rings into one viewport.
  Contraction,
};

struct PhaseImage {
  int width = 0;
  int height = 0;
  Window window{};
  std::vector<std::uint8_t> pixels;  // RGB, row-major, top row first
  // Pixels whose premapped point is not representable; painted white.
  long long overflow_pixels = 0;

  Rgb at(int i, int j) const {
    const std::size_t o =
        3 * (static_cast<std::size_t>(j) * static_cast<std::size_t>(width) +
             static_cast<std::size_t>(i));
    return {pixels[o], pixels[o + 1], pixels[o + 2]};
  }
};

// Pixel (0, 0) is the top-left corner; pixel centers are mapped affinely
// onto the window, with the top edge at im_max.
PhaseImage render_phase(const PolyPoly& p, const Window& window, int width,
                        int height, Premap premap = Premap::Identity,
                        int threads = 1);

// Black filled discs of radius max(2 px, 0.4% of the width) at each zero.
void draw_zero_marks(PhaseImage& img, std::span<const Complex> zeros);

void write_ppm(const PhaseImage& img, const std::filesystem::path& path);
PhaseImage read_ppm(const std::filesystem::path& path);

}  // namespace polyzero

#endif
