// polyzero: command-line front end for the polyanalytic polynomial library.
//
// Subcommands: analyze, bounds, wind, roots, extremal, plot, construct.
// Exit codes: 0 success, 1 domain error (e.g. finiteness not established,
// winding not certifiable), 2 usage or input-format error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <polyzero/bounds.hpp>
#include <polyzero/extremal.hpp>
#include <polyzero/poly_io.hpp>
#include <polyzero/polypoly.hpp>
#include <polyzero/render.hpp>
#include <polyzero/rootfind.hpp>
#include <polyzero/winding.hpp>
#include <polyzero/zerotheory.hpp>

namespace {

using polyzero::Complex;
using polyzero::PolyPoly;

struct InputSpec {
  std::string path;
  std::string inline_text;

  PolyPoly load() const {
    if (!inline_text.empty()) return polyzero::parse_poly_text(inline_text);
    if (path.empty())
      throw CLI::ValidationError("input", "need a polynomial file or --inline");
    return polyzero::read_poly_file(path);
  }
};

void add_input(CLI::App* cmd, InputSpec& in) {
  auto* pos = cmd->add_option("file", in.path, "polynomial file");
  auto* inl = cmd->add_option("--inline", in.inline_text,
                              "inline polynomial text (';' separates lines)");
  pos->excludes(inl);
  inl->excludes(pos);
}

std::string fmt(double v) { return polyzero::format_double(v); }

std::string fmt(Complex v) { return polyzero::format_complex(v); }

const char* kind_name(polyzero::FinitenessKind k) {
  switch (k) {
    case polyzero::FinitenessKind::MonicInZ: return "MonicInZ";
    case polyzero::FinitenessKind::MonicInZbar: return "MonicInZbar";
    case polyzero::FinitenessKind::AsymmetricCoefficient:
      return "AsymmetricCoefficient";
    case polyzero::FinitenessKind::SelfConjugate: return "SelfConjugate";
    default: return "Inconclusive";
  }
}

void print_census_csv(std::ostream& os, const polyzero::ZeroCensus& census) {
  os << "re,im,index,jac_sign,residual\n";
  for (const auto& z : census.zeros)
    os << fmt(z.z.real()) << "," << fmt(z.z.imag()) << "," << z.index << ","
       << z.jacobian_sign << "," << fmt(z.residual) << "\n";
  os << "# total_winding=" << census.total_winding
     << " certified=" << (census.certified ? "true" : "false") << "\n";
}

std::vector<Complex> read_point_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("file", "cannot open " + path);
  std::vector<Complex> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (row >> re >> im) pts.push_back({re, im});
  }
  return pts;
}

int cmd_analyze(const PolyPoly& p, bool irreducible_hint, bool as_json) {
  const auto deg = polyzero::degrees(p);
  const auto verdict = polyzero::existence_verdict(p);
  const auto cert = polyzero::finiteness_certificate(p, irreducible_hint);
  std::optional<long long> max_zeros;
  if (cert.kind != polyzero::FinitenessKind::Inconclusive &&
      cert.kind != polyzero::FinitenessKind::SelfConjugate)
    max_zeros = polyzero::max_zero_bound(p, irreducible_hint);

  if (as_json) {
    nlohmann::json j;
    j["degree"] = deg.degree;
    j["degree_z"] = deg.analytic;
    j["degree_zbar"] = deg.anti_analytic;
    j["balk_existence"] = verdict.balk;
    if (verdict.dominant_ell)
      j["dominant_ell"] = *verdict.dominant_ell;
    else
      j["dominant_ell"] = nullptr;
    j["zero_guaranteed"] = verdict.guaranteed;
    j["finiteness"] = kind_name(cert.kind);
    if (cert.lambda)
      j["lambda"] = {cert.lambda->real(), cert.lambda->imag()};
    if (cert.witness_index)
      j["witness"] = {cert.witness_index->first, cert.witness_index->second};
    if (max_zeros)
      j["max_zeros"] = *max_zeros;
    else
      j["max_zeros"] = nullptr;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "degree=" << deg.degree << "\n"
            << "degree_z=" << deg.analytic << "\n"
            << "degree_zbar=" << deg.anti_analytic << "\n"
            << "balk_existence=" << (verdict.balk ? "true" : "false") << "\n";
  if (verdict.dominant_ell)
    std::cout << "dominant_ell=" << *verdict.dominant_ell << "\n";
  std::cout << "zero_guaranteed=" << (verdict.guaranteed ? "true" : "false")
            << "\n"
            << "finiteness=" << kind_name(cert.kind) << "\n";
  if (cert.lambda) std::cout << "lambda=" << fmt(*cert.lambda) << "\n";
  if (cert.witness_index)
    std::cout << "witness=" << cert.witness_index->first << ","
              << cert.witness_index->second << "\n";
  if (max_zeros)
    std::cout << "max_zeros=" << *max_zeros << "\n";
  else
    std::cout << "max_zeros=unknown\n";
  return 0;
}

int cmd_bounds(const PolyPoly& p) {
  const auto rep = polyzero::bounds_report(p);
  std::cout << "alpha_n=" << fmt(rep.alpha_n) << " r0=" << fmt(rep.r0)
            << " r1=" << fmt(rep.r1) << " r2=" << fmt(rep.r2)
            << " applicable=" << (rep.applicable ? "true" : "false") << "\n";
  return 0;
}

int cmd_wind(const PolyPoly& p, const std::vector<double>& center, double radius,
             const std::vector<double>& annulus) {
  if (!annulus.empty()) {
    const auto outer = polyzero::winding(
        p, polyzero::Curve::circle({0.0, 0.0}, annulus[1]));
    const auto inner = polyzero::winding(
        p, polyzero::Curve::circle({0.0, 0.0}, annulus[0]));
    std::cout << "wind=" << (outer.wind - inner.wind)
              << " min_modulus=" << fmt(std::min(outer.min_modulus, inner.min_modulus))
              << " samples=" << (outer.samples + inner.samples) << "\n";
    return 0;
  }
  const Complex c{center[0], center[1]};
  const auto w = polyzero::winding(p, polyzero::Curve::circle(c, radius));
  std::cout << "wind=" << w.wind << " min_modulus=" << fmt(w.min_modulus)
            << " samples=" << w.samples << "\n";
  return 0;
}

int cmd_roots(const PolyPoly& p, std::optional<double> radius, double spacing,
              const std::string& seeds_file, int threads) {
  double disk = 0.0;
  if (radius) {
    disk = *radius;
  } else {
    const auto rep = polyzero::bounds_report(p);
    if (!rep.applicable)
      throw CLI::ValidationError(
          "--radius", "no dominant top coefficient: search radius required");
    disk = rep.r0 + 1.0;
  }
  polyzero::AtlasOptions opt;
  opt.grid_spacing = spacing;
  opt.threads = threads;
  std::vector<Complex> extra;
  if (!seeds_file.empty()) extra = read_point_csv(seeds_file);
  const auto census = polyzero::zero_atlas(p, disk, opt, extra);
  print_census_csv(std::cout, census);
  return 0;
}

int cmd_extremal(int n, const std::string& coeffs_file, int threads) {
  polyzero::ExtremalSchedule sched;
  if (!coeffs_file.empty()) {
    std::vector<Complex> base = read_point_csv(coeffs_file);
    sched = polyzero::schedule_from_coefficients(base);
  } else {
    sched = polyzero::extremal_coefficients(n);
  }
  std::cout << "n=" << sched.n() << "\n";
  for (int k = 1; k <= sched.n(); ++k)
    std::cout << "a_" << k << "=" << fmt(sched.a[static_cast<std::size_t>(k - 1)])
              << "\n";
  for (int k = 1; k <= sched.n(); ++k)
    std::cout << "r_" << k << "=" << fmt(sched.r[static_cast<std::size_t>(k - 1)])
              << "\n";
  for (int k = 2; k <= sched.n(); ++k)
    std::cout << "margin_" << k << "="
              << fmt(sched.margins[static_cast<std::size_t>(k - 1)]) << "\n";
  const auto ver = polyzero::verify_extremal(sched, threads);
  std::cout << "# census\n";
  print_census_csv(std::cout, ver.census);
  std::cout << "max_relative_residual=" << fmt(ver.max_relative_residual) << "\n";
  return 0;
}

int cmd_plot(const PolyPoly& p, const std::vector<double>& window, int width,
             int height, bool contract, const std::string& marks_file,
             const std::string& out, int threads) {
  const polyzero::Window win{window[0], window[1], window[2], window[3]};
  const auto premap = contract ? polyzero::Premap::Contraction
                               : polyzero::Premap::Identity;
  auto img = polyzero::render_phase(p, win, width, height, premap, threads);
  if (!marks_file.empty())
    polyzero::draw_zero_marks(img, read_point_csv(marks_file));
  polyzero::write_ppm(img, out);
  if (img.overflow_pixels > 0)
    std::cerr << "warning: " << img.overflow_pixels
              << " pixels overflowed under the contraction premap\n";
  return 0;
}

int cmd_construct(int n, const std::string& k_text, const std::string& out) {
  PolyPoly p;
  if (k_text == "inf") {
    p = polyzero::poly_with_k_zeros(n, polyzero::kInfinitelyManyZeros);
  } else {
    long long k = 0;
    try {
      k = std::stoll(k_text);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--k", "expected an integer or 'inf'");
    }
    p = polyzero::poly_with_k_zeros(n, k);
  }
  polyzero::write_poly_file(p, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero certificates, bounds, and atlases for polyanalytic "
               "polynomials P(z, conj z)"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker thread cap")
      ->check(CLI::PositiveNumber);

  InputSpec in_analyze, in_bounds, in_wind, in_roots, in_plot;
  bool irreducible_hint = false, as_json = false;

  auto* analyze = app.add_subcommand("analyze", "existence and finiteness verdicts");
  add_input(analyze, in_analyze);
  analyze->add_flag("--irreducible-hint", irreducible_hint,
                    "assert the polynomial is irreducible");
  analyze->add_flag("--json", as_json, "machine-readable output");

  auto* bounds = app.add_subcommand("bounds", "inclusion radii r0, r1, r2");
  add_input(bounds, in_bounds);

  auto* wind = app.add_subcommand("wind", "winding number along a circle");
  add_input(wind, in_wind);
  std::vector<double> center{0.0, 0.0};
  double radius = 0.0;
  std::vector<double> annulus;
  auto* center_opt = wind->add_option("--center", center, "circle center (re im)")
                         ->expected(2);
  auto* radius_opt = wind->add_option("--radius", radius, "circle radius");
  auto* annulus_opt =
      wind->add_option("--annulus", annulus, "annulus radii (inner outer)")
          ->expected(2);
  annulus_opt->excludes(radius_opt)->excludes(center_opt);

  auto* roots = app.add_subcommand("roots", "certified zero atlas in a disk");
  add_input(roots, in_roots);
  std::optional<double> roots_radius;
  double spacing = 0.0;
  std::string seeds_file;
  roots->add_option("--radius", roots_radius,
                    "search disk radius (default: r0 + 1 when bounds apply)");
  roots->add_option("--spacing", spacing, "seed grid spacing override");
  roots->add_option("--seeds-file", seeds_file, "extra seeds, re,im CSV");

  auto* extremal =
      app.add_subcommand("extremal", "construct and verify an n^2-zero polynomial");
  int extremal_n = 0;
  std::string coeffs_file;
  auto* n_opt = extremal->add_option("--n", extremal_n, "degree")
                    ->check(CLI::PositiveNumber);
  extremal->add_option("--coeffs", coeffs_file,
                       "verify these coefficients instead (re,im CSV)");
  extremal->callback([&] {
    if (coeffs_file.empty() && n_opt->count() == 0)
      throw CLI::RequiredError("--n or --coeffs");
  });

  auto* plot = app.add_subcommand("plot", "phase plot as binary PPM");
  add_input(plot, in_plot);
  std::vector<double> window;
  std::vector<int> size;
  bool contract = false;
  std::string marks_file, plot_out;
  plot->add_option("--window", window, "re_min re_max im_min im_max")
      ->expected(4)
      ->required();
  plot->add_option("--size", size, "width height")->expected(2)->required();
  plot->add_flag("--contract", contract, "premap z -> z*exp(|z|^2)");
  plot->add_option("--marks", marks_file, "census CSV; draw zero markers");
  plot->add_option("-o,--output", plot_out, "output PPM path")->required();

  auto* construct =
      app.add_subcommand("construct", "write a polynomial with k zeros");
  int construct_n = 0;
  std::string construct_k, construct_out;
  construct->add_option("--n", construct_n, "degree")
      ->check(CLI::PositiveNumber)
      ->required();
  construct->add_option("--k", construct_k, "zero count (integer or 'inf')")
      ->required();
  construct->add_option("-o,--output", construct_out, "output polynomial path")
      ->required();

  try {
    app.parse(argc, argv);
    if (analyze->parsed())
      return cmd_analyze(in_analyze.load(), irreducible_hint, as_json);
    if (bounds->parsed()) return cmd_bounds(in_bounds.load());
    if (wind->parsed()) {
      if (annulus.empty() && radius_opt->count() == 0)
        throw CLI::RequiredError("--radius or --annulus");
      return cmd_wind(in_wind.load(), center, radius, annulus);
    }
    if (roots->parsed())
      return cmd_roots(in_roots.load(), roots_radius, spacing, seeds_file,
                       threads);
    if (extremal->parsed()) return cmd_extremal(extremal_n, coeffs_file, threads);
    if (plot->parsed())
      return cmd_plot(in_plot.load(), window, size[0], size[1], contract,
                      marks_file, plot_out, threads);
    if (construct->parsed())
      return cmd_construct(construct_n, construct_k, construct_out);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const polyzero::PolyParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
