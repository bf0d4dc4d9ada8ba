#ifndef POLYZERO_POLY_IO_HPP
#define POLYZERO_POLY_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polyzero/polypoly.hpp"

namespace polyzero {

/* Text format, one declaration per line:

     # comment
     n 2
     2 0 1 0
     1 0 1 0
     0 1 1 0
     0 0 1 0

   The header "n N" declares the degree bound; every following line is
   "j k re im" for a term (re + i*im) z^j zbar^k.  Terms with j + k > N are
   rejected.  Repeated (j, k) entries accumulate. */

struct PolyParseError : std::runtime_error {
  PolyParseError(const std::string& msg, int line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
  int line;
};

PolyPoly parse_poly_text(std::string_view text);
PolyPoly read_poly_file(const std::filesystem::path& path);

std::string format_poly_text(const PolyPoly& p);
void write_poly_file(const PolyPoly& p, const std::filesystem::path& path);

// Shortest round-trip decimal formatting (17 significant digits at most).
std::string format_double(double v);
std::string format_complex(Complex v);

}  // namespace polyzero

#endif
