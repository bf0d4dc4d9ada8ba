#ifndef POLYZERO_POLYPOLY_HPP
#define POLYZERO_POLYPOLY_HPP

#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace polyzero {

using Complex = std::complex<double>;

/* A polyanalytic polynomial

       P(z, zbar) = sum_{j+k <= n} c[j][k] z^j zbar^k

   stored densely over the triangle j + k <= n, j, k >= 0.  Instances are
   immutable and normalized: after construction the bound n equals the total
   degree (the zero polynomial keeps n = 0).  Coefficients must be finite. */
class PolyPoly {
 public:
  struct Term {
    int j;
    int k;
    Complex coeff;
  };

  PolyPoly();  // zero polynomial
  PolyPoly(int degree_bound, std::span<const Term> terms);
  PolyPoly(int degree_bound, std::initializer_list<Term> terms);

  static PolyPoly constant(Complex c);
  static PolyPoly monomial(int j, int k, Complex coeff);
  static PolyPoly var_z();
  static PolyPoly var_zbar();

  bool is_zero() const { return zero_; }
  int degree_bound() const { return n_; }

  // Coefficient of z^j zbar^k; zero outside the stored triangle.
  Complex coeff(int j, int k) const;

  // Nonzero terms ordered by total degree, then by analytic power j.
  std::vector<Term> terms() const;

  double max_coeff_magnitude() const;

  bool operator==(const PolyPoly& other) const;

  const std::vector<Complex>& raw() const { return c_; }

 private:
  void normalize();

  int n_ = 0;
  bool zero_ = true;
  std::vector<Complex> c_;  // triangular, index (j,k) -> d(d+1)/2 + j, d = j+k
};

struct DegreeTriple {
  // -1 encodes the degree of the zero polynomial for all three fields.
  int degree = -1;
  int analytic = -1;      // highest power of z with a nonzero coefficient
  int anti_analytic = -1; // highest power of zbar with a nonzero coefficient
  bool zero_polynomial() const { return degree < 0; }
};

enum class Wirtinger { dz, dzbar };

Complex eval(const PolyPoly& p, Complex z);

// eval with double-double products and accumulation.  Plain eval carries an
// absolute error near eps * sum |c[j][k] z^j zbar^k|, which swamps the value
// of P close to a zero with heavy cancellation; this variant keeps roughly
// twice the working precision at ~10x the cost.  Used to polish zeros whose
// Jacobian degenerates.
Complex eval_compensated(const PolyPoly& p, Complex z);

PolyPoly wirtinger(const PolyPoly& p, Wirtinger which);
double jacobian(const PolyPoly& p, Complex z);
DegreeTriple degrees(const PolyPoly& p);

PolyPoly add(const PolyPoly& p, const PolyPoly& q);
PolyPoly multiply(const PolyPoly& p, const PolyPoly& q);
PolyPoly scale(const PolyPoly& p, Complex s);
PolyPoly pow(const PolyPoly& p, int e);

// Coefficient reflection b[j][k] = conj(a[k][j]); satisfies
// eval(conjugate(P), z) == conj(eval(P, z)).
PolyPoly conjugate(const PolyPoly& p);

// Unimodular lambda with c[j][k] = lambda * conj(c[k][j]) for all j, k,
// checked coefficient-wise within tol relative to the largest magnitude.
std::optional<Complex> self_conjugate_lambda(const PolyPoly& p,
                                             double tol = 1e-12);

inline PolyPoly operator+(const PolyPoly& p, const PolyPoly& q) { return add(p, q); }
PolyPoly operator-(const PolyPoly& p, const PolyPoly& q);
inline PolyPoly operator*(const PolyPoly& p, const PolyPoly& q) { return multiply(p, q); }
inline PolyPoly operator*(Complex s, const PolyPoly& p) { return scale(p, s); }
inline PolyPoly operator*(const PolyPoly& p, Complex s) { return scale(p, s); }

}  // namespace polyzero

#endif
