#ifndef YHECKE_EXACTNUM_HPP
#define YHECKE_EXACTNUM_HPP

// Exact scalars: GMP rationals, the cyclotomic field Q(zeta_d) and sparse
// Laurent polynomials in u, v, g (g stands for the invariant parameter gamma).

#include <gmpxx.h>

#include <array>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace yhecke {

using Rat = mpq_class;

/// Integer coefficients of the d-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(int d);

/// Euler's totient, i.e. the degree of the d-th cyclotomic polynomial.
int euler_phi(int d);

namespace detail {
struct CycloField;
}

/// Element of Q(zeta_d), stored in the power basis 1, zeta, ..., zeta^{phi(d)-1}
/// and always reduced modulo Phi_d.
///
/// Values of order 1 are plain rationals and combine with any order; mixing two
/// different orders greater than 1 is an error.
class Cyclo {
 public:
  Cyclo();
  Cyclo(const Rat& r, int order = 1);  // NOLINT(google-explicit-constructor)
  Cyclo(long v, int order = 1) : Cyclo(Rat(v), order) {}  // NOLINT

  /// zeta_d^e for any integer e.
  static Cyclo zeta_power(int d, long long e);

  int order() const;
  std::span<const Rat> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only meaningful when is_rational().
  const Rat& rational() const { return coeffs_.front(); }

  Cyclo promoted(int d) const;
  Cyclo inverse() const;
  /// Multiplication by zeta^e without a general product.
  Cyclo times_zeta_power(long long e) const;

  std::complex<double> to_complex() const;
  /// Rational value as `p/q`, otherwise `(r0 + r1*z + ... )`.
  std::string to_string() const;
  /// Parses the output of to_string(); `order` is required for the
  /// parenthesised form.
  static Cyclo parse(std::string_view text, int order);

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo operator-() const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

 private:
  Cyclo(const detail::CycloField* f, std::vector<Rat> c) : field_(f), coeffs_(std::move(c)) {}
  void unify(const Cyclo& o);

  const detail::CycloField* field_;
  std::vector<Rat> coeffs_;
};

/// xi_a^s = zeta^{(a-1)s}, the value of the a-th d-th root of unity raised to s.
Cyclo root_power(int d, int a, long long s);

/// Exponent triple (e_u, e_v, e_g).
using Exponent = std::array<int, 3>;

/// Sparse Laurent polynomial in u, v, g over Q(zeta_d). No stored coefficient
/// is zero; terms iterate in ascending lexicographic exponent order.
class LPoly {
 public:
  using Terms = std::map<Exponent, Cyclo>;

  LPoly() = default;
  LPoly(const Cyclo& c);  // NOLINT(google-explicit-constructor)
  LPoly(const Rat& r) : LPoly(Cyclo(r)) {}  // NOLINT
  LPoly(long v) : LPoly(Cyclo(v)) {}  // NOLINT

  static LPoly monomial(const Cyclo& c, int eu, int ev, int eg);
  static LPoly u(int e = 1) { return monomial(Cyclo(1), e, 0, 0); }
  static LPoly v(int e = 1) { return monomial(Cyclo(1), 0, e, 0); }
  static LPoly g(int e = 1) { return monomial(Cyclo(1), 0, 0, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of u^eu v^ev g^eg (zero when absent).
  Cyclo coeff(const Exponent& e) const;
  /// Largest coefficient order among the terms (1 for an all-rational polynomial).
  int order() const;
  /// True when no term carries a nonzero g exponent.
  bool is_gamma_free() const;

  /// c^{-1} u^{-a} v^{-b} g^{-c}; throws on zero or on more than one term.
  LPoly monomial_inverse() const;
  /// Non-negative powers for any polynomial; negative powers for monomials.
  LPoly pow(int e) const;

  std::complex<double> eval(std::complex<double> u0, std::complex<double> v0,
                            std::complex<double> g0) const;

  /// Canonical text: descending exponent order, `C * u^A * v^B * g^C` terms
  /// joined by ` + `, `0` for the zero polynomial.
  std::string to_string() const;
  /// One `e_u e_v e_g c_0 ... c_{phi-1}` line per term, descending order.
  std::vector<std::string> to_machine_lines() const;
  static LPoly parse(std::string_view text, int order);

  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const LPoly& o);
  LPoly& operator*=(const Cyclo& c);
  LPoly operator-() const;

  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const Cyclo& c, LPoly a) { return a *= c; }
  friend bool operator==(const LPoly& a, const LPoly& b);

  /// this += c * u^e * o, the inner loop of every sparse product.
  void add_scaled(const LPoly& o, const Cyclo& c, const Exponent& e);

 private:
  void add_term(const Exponent& e, const Cyclo& c);
  Terms terms_;
};

/// v^{-1}(1 - u^2), the value of the normalized trace on an extra strand.
LPoly strand_factor();

/// Free-function spellings of the ring operations.
inline LPoly add(const LPoly& a, const LPoly& b) { return a + b; }
inline LPoly mul(const LPoly& a, const LPoly& b) { return a * b; }
inline LPoly scalar_mul(const Cyclo& c, const LPoly& p) { return c * p; }
inline LPoly monomial_inverse(const LPoly& p) { return p.monomial_inverse(); }
inline std::complex<double> eval_complex(const LPoly& p, std::complex<double> u0,
                                         std::complex<double> v0, std::complex<double> g0) {
  return p.eval(u0, v0, g0);
}

}  // namespace yhecke

#endif  // YHECKE_EXACTNUM_HPP
