#include "polyzero/polypoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyzero {

namespace {

inline std::size_t tri_size(int n) {
  return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

inline std::size_t tri_index(int j, int k) {
  const int d = j + k;
  return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 +
         static_cast<std::size_t>(j);
}

inline bool finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace

PolyPoly::PolyPoly() : n_(0), zero_(true), c_(1, Complex{0.0, 0.0}) {}

PolyPoly::PolyPoly(int degree_bound, std::span<const Term> terms) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
  n_ = degree_bound;
  c_.assign(tri_size(n_), Complex{0.0, 0.0});
  for (const Term& t : terms) {
    if (t.j < 0 || t.k < 0) throw std::invalid_argument("negative monomial power");
    if (t.j + t.k > n_) throw std::invalid_argument("term beyond degree bound");
    if (!finite(t.coeff)) throw std::invalid_argument("non-finite coefficient");
    c_[tri_index(t.j, t.k)] += t.coeff;
  }
  normalize();
}

PolyPoly::PolyPoly(int degree_bound, std::initializer_list<Term> terms)
    : PolyPoly(degree_bound, std::span<const Term>(terms.begin(), terms.size())) {}

PolyPoly PolyPoly::constant(Complex c) { return PolyPoly(0, {Term{0, 0, c}}); }

PolyPoly PolyPoly::monomial(int j, int k, Complex coeff) {
  if (j < 0 || k < 0) throw std::invalid_argument("negative monomial power");
  return PolyPoly(j + k, {Term{j, k, coeff}});
}

PolyPoly PolyPoly::var_z() { return monomial(1, 0, 1.0); }
PolyPoly PolyPoly::var_zbar() { return monomial(0, 1, 1.0); }

void PolyPoly::normalize() {
  int top = -1;
  for (int d = n_; d >= 0 && top < 0; --d)
    for (int j = 0; j <= d; ++j)
      if (c_[tri_index(j, d - j)] != Complex{0.0, 0.0}) {
        top = d;
        break;
      }
  if (top < 0) {
    n_ = 0;
    zero_ = true;
    c_.assign(1, Complex{0.0, 0.0});
    return;
  }
  zero_ = false;
  n_ = top;
  c_.resize(tri_size(n_));
}

Complex PolyPoly::coeff(int j, int k) const {
  if (j < 0 || k < 0 || j + k > n_) return {0.0, 0.0};
  return c_[tri_index(j, k)];
}

std::vector<PolyPoly::Term> PolyPoly::terms() const {
  std::vector<Term> out;
  for (int d = 0; d <= n_; ++d)
    for (int j = 0; j <= d; ++j) {
      const Complex v = c_[tri_index(j, d - j)];
      if (v != Complex{0.0, 0.0}) out.push_back({j, d - j, v});
    }
  return out;
}

double PolyPoly::max_coeff_magnitude() const {
  double m = 0.0;
  for (const Complex& v : c_) m = std::max(m, std::abs(v));
  return m;
}

bool PolyPoly::operator==(const PolyPoly& other) const {
  return n_ == other.n_ && zero_ == other.zero_ && c_ == other.c_;
}

Complex eval(const PolyPoly& p, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("eval at non-finite point");
  const int n = p.degree_bound();
  const Complex zb = std::conj(z);
  // Outer Horner in zbar over the rows k, inner Horner in z within each row.
  Complex acc{0.0, 0.0};
  for (int k = n; k >= 0; --k) {
    Complex row{0.0, 0.0};
    for (int j = n - k; j >= 0; --j) row = row * z + p.coeff(j, k);
    acc = acc * zb + row;
  }
  return acc;
}

namespace {

// Double-double scalar: value = hi + lo with |lo| <= ulp(hi)/2.
struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b| or a == 0.
inline Dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd dd_add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd dd_mul(Dd a, Dd b) {
  Dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd dd_neg(Dd a) { return {-a.hi, -a.lo}; }

struct Cdd {
  Dd re;
  Dd im;
};

inline Cdd cdd_from(Complex c) { return {{c.real(), 0.0}, {c.imag(), 0.0}}; }

inline Cdd cdd_add(Cdd a, Cdd b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline Cdd cdd_mul(Cdd a, Cdd b) {
  return {dd_add(dd_mul(a.re, b.re), dd_neg(dd_mul(a.im, b.im))),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

}  // namespace

Complex eval_compensated(const PolyPoly& p, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("eval at non-finite point");
  const int n = p.degree_bound();
  const Cdd zz = cdd_from(z);
  const Cdd zb = cdd_from(std::conj(z));
  Cdd acc{};
  for (int k = n; k >= 0; --k) {
    Cdd row{};
    for (int j = n - k; j >= 0; --j)
      row = cdd_add(cdd_mul(row, zz), cdd_from(p.coeff(j, k)));
    acc = cdd_add(cdd_mul(acc, zb), row);
  }
  return {acc.re.hi, acc.im.hi};
}

PolyPoly wirtinger(const PolyPoly& p, Wirtinger which) {
  if (p.is_zero()) return PolyPoly();
  const int n = p.degree_bound();
  std::vector<PolyPoly::Term> terms;
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j) {
      const int k = d - j;
      const Complex v = p.coeff(j, k);
      if (v == Complex{0.0, 0.0}) continue;
      if (which == Wirtinger::dz) {
        if (j >= 1) terms.push_back({j - 1, k, static_cast<double>(j) * v});
      } else {
        if (k >= 1) terms.push_back({j, k - 1, static_cast<double>(k) * v});
      }
    }
  if (terms.empty()) return PolyPoly();
  return PolyPoly(n == 0 ? 0 : n - 1, terms);
}

double jacobian(const PolyPoly& p, Complex z) {
  const Complex a = eval(wirtinger(p, Wirtinger::dz), z);
  const Complex b = eval(wirtinger(p, Wirtinger::dzbar), z);
  return std::norm(a) - std::norm(b);
}

DegreeTriple degrees(const PolyPoly& p) {
  DegreeTriple t;
  if (p.is_zero()) return t;
  t.degree = p.degree_bound();
  t.analytic = 0;
  t.anti_analytic = 0;
  for (const auto& term : p.terms()) {
    t.analytic = std::max(t.analytic, term.j);
    t.anti_analytic = std::max(t.anti_analytic, term.k);
  }
  return t;
}

PolyPoly add(const PolyPoly& p, const PolyPoly& q) {
  const int n = std::max(p.degree_bound(), q.degree_bound());
  std::vector<PolyPoly::Term> terms;
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j) {
      const Complex v = p.coeff(j, d - j) + q.coeff(j, d - j);
      if (v != Complex{0.0, 0.0}) terms.push_back({j, d - j, v});
    }
  return PolyPoly(n, terms);
}

PolyPoly operator-(const PolyPoly& p, const PolyPoly& q) {
  return add(p, scale(q, Complex{-1.0, 0.0}));
}

PolyPoly multiply(const PolyPoly& p, const PolyPoly& q) {
  if (p.is_zero() || q.is_zero()) return PolyPoly();
  const auto pt = p.terms();
  const auto qt = q.terms();
  const int n = p.degree_bound() + q.degree_bound();
  std::vector<Complex> acc(static_cast<std::size_t>(n + 1) * (n + 2) / 2,
                           Complex{0.0, 0.0});
  auto at = [](int j, int k) {
    const int d = j + k;
    return static_cast<std::size_t>(d) * (d + 1) / 2 + j;
  };
  for (const auto& a : pt)
    for (const auto& b : qt) acc[at(a.j + b.j, a.k + b.k)] += a.coeff * b.coeff;
  std::vector<PolyPoly::Term> terms;
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j)
      if (acc[at(j, d - j)] != Complex{0.0, 0.0})
        terms.push_back({j, d - j, acc[at(j, d - j)]});
  return PolyPoly(n, terms);
}

PolyPoly scale(const PolyPoly& p, Complex s) {
  std::vector<PolyPoly::Term> terms;
  for (const auto& t : p.terms()) terms.push_back({t.j, t.k, s * t.coeff});
  return PolyPoly(p.degree_bound(), terms);
}

PolyPoly pow(const PolyPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  PolyPoly out = PolyPoly::constant(1.0);
  for (int i = 0; i < e; ++i) out = multiply(out, p);
  return out;
}

PolyPoly conjugate(const PolyPoly& p) {
  std::vector<PolyPoly::Term> terms;
  for (const auto& t : p.terms()) terms.push_back({t.k, t.j, std::conj(t.coeff)});
  return PolyPoly(p.degree_bound(), terms);
}

std::optional<Complex> self_conjugate_lambda(const PolyPoly& p, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  if (p.is_zero()) return std::nullopt;
  const double big = p.max_coeff_magnitude();
  // lambda from the first nonzero coefficient whose mirror is usable.
  std::optional<Complex> lambda;
  for (const auto& t : p.terms()) {
    const Complex mirror = p.coeff(t.k, t.j);
    if (mirror == Complex{0.0, 0.0}) return std::nullopt;
    lambda = t.coeff / std::conj(mirror);
    break;
  }
  if (!lambda) return std::nullopt;
  if (std::fabs(std::abs(*lambda) - 1.0) > tol) return std::nullopt;
  const Complex lam = *lambda / std::abs(*lambda);
  const int n = p.degree_bound();
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j) {
      const int k = d - j;
      if (std::abs(p.coeff(j, k) - lam * std::conj(p.coeff(k, j))) > tol * big)
        return std::nullopt;
    }
  return lam;
}

}  // namespace polyzero
