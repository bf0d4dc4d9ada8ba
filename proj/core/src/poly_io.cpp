#include "polyzero/poly_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace polyzero {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view tok, int& out) {
  auto r = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return r.ec == std::errc{} && r.ptr == tok.data() + tok.size();
}

bool parse_double(std::string_view tok, double& out) {
  auto r = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return r.ec == std::errc{} && r.ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

}  // namespace

PolyPoly parse_poly_text(std::string_view text) {
  int declared_n = -1;
  std::vector<PolyPoly::Term> terms;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find_first_of("\n;", pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto tok = split_ws(line);
    if (declared_n < 0) {
      if (tok.size() != 2 || tok[0] != "n" || !parse_int(tok[1], declared_n) ||
          declared_n < 0)
        throw PolyParseError("expected header \"n <N>\"", line_no);
      continue;
    }
    if (tok.size() != 4) throw PolyParseError("expected \"j k re im\"", line_no);
    int j, k;
    double re, im;
    if (!parse_int(tok[0], j) || !parse_int(tok[1], k) ||
        !parse_double(tok[2], re) || !parse_double(tok[3], im))
      throw PolyParseError("malformed term", line_no);
    if (j < 0 || k < 0) throw PolyParseError("negative power", line_no);
    if (j + k > declared_n)
      throw PolyParseError("term degree exceeds declared bound", line_no);
    if (!std::isfinite(re) || !std::isfinite(im))
      throw PolyParseError("non-finite coefficient", line_no);
    terms.push_back({j, k, Complex{re, im}});
  }
  if (declared_n < 0) throw PolyParseError("missing header \"n <N>\"", line_no);
  return PolyPoly(declared_n, terms);
}

PolyPoly read_poly_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_poly_text(ss.str());
}

std::string format_double(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::string format_complex(Complex v) {
  return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
         format_double(std::fabs(v.imag())) + "i";
}

std::string format_poly_text(const PolyPoly& p) {
  std::string out = "n " + std::to_string(p.degree_bound()) + "\n";
  for (const auto& t : p.terms()) {
    out += std::to_string(t.j) + " " + std::to_string(t.k) + " " +
           format_double(t.coeff.real()) + " " + format_double(t.coeff.imag()) +
           "\n";
  }
  return out;
}

void write_poly_file(const PolyPoly& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_poly_text(p);
}

}  // namespace polyzero
