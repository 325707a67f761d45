#ifndef YHECKE_YOKONUMA_HPP
#define YHECKE_YOKONUMA_HPP

// Y_{d,n} in the basis t_1^{k_1} ... t_n^{k_n} gt_w, where gt_w = u^{-l(w)} g_w
// and g_i^2 = u^2 + v e_i g_i with e_i = (1/d) sum_s t_i^s t_{i+1}^{-s}.

#include <array>
#include <cstdint>
#include <map>

#include "yhecke/exactnum.hpp"
#include "yhecke/permcomp.hpp"

namespace yhecke {

/// Framing exponents k_1..k_n, each reduced mod d; unused slots are zero.
using Framing = std::array<std::uint8_t, kMaxStrands>;

struct YKey {
  Framing k{};
  Perm w;
  friend auto operator<=>(const YKey&, const YKey&) = default;
  friend bool operator==(const YKey&, const YKey&) = default;
};

struct YGen {
  enum class Kind { T, TInv, G, GInv, GTilde, GTildeInv, E };
  Kind kind;
  int index;

  static YGen t(int j) { return {Kind::T, j}; }
  static YGen t_inv(int j) { return {Kind::TInv, j}; }
  static YGen g(int i) { return {Kind::G, i}; }
  static YGen g_inv(int i) { return {Kind::GInv, i}; }
  static YGen gt(int i) { return {Kind::GTilde, i}; }
  static YGen gt_inv(int i) { return {Kind::GTildeInv, i}; }
  static YGen e(int i) { return {Kind::E, i}; }
};

enum class Side { Left, Right };

class YElem {
 public:
  using Terms = std::map<YKey, LPoly>;

  YElem(int d, int n);

  static YElem one(int d, int n) { return scalar(d, n, LPoly(1)); }
  static YElem scalar(int d, int n, const LPoly& c);
  /// c * t^k gt_w; k entries are reduced mod d.
  static YElem term(int d, const std::vector<int>& k, const Perm& w, const LPoly& c = LPoly(1));
  static YElem generator(int d, int n, YGen gen);

  int d() const { return d_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LPoly coeff(const std::vector<int>& k, const Perm& w) const;

  void add_term(const YKey& key, const LPoly& c);
  void add_scaled(const YElem& x, const LPoly& c);

  YElem& operator+=(const YElem& o);
  YElem& operator-=(const YElem& o);
  YElem operator-() const;
  friend YElem operator+(YElem a, const YElem& b) { return a += b; }
  friend YElem operator-(YElem a, const YElem& b) { return a -= b; }
  friend YElem operator*(const LPoly& c, const YElem& x);
  friend YElem operator*(const YElem& x, const YElem& y);
  friend bool operator==(const YElem&, const YElem&) = default;

  /// The same element in Y_{d,m}, m >= n.
  YElem embedded(int m) const;
  std::string to_string() const;

 private:
  int d_;
  int n_;
  Terms terms_;
};

YElem y_mul_gen(const YElem& x, YGen gen, Side side);
YElem y_mul(const YElem& x, const YElem& y);

/// E_chi = prod_i (1/d) sum_s chi(t_i)^s t_i^{-s}.
YElem idempotent_E(const Character& chi);
/// Sum of E_chi over the orbit of mu.
YElem idempotent_Emu(const Composition& mu);

/// Coefficients in the basis E_chi gt_w.
using EBasis = std::map<std::pair<Character, Perm>, LPoly>;
EBasis to_E_basis(const YElem& x);
YElem from_E_basis(int d, int n, const EBasis& coeffs);

/// All characters of (Z/dZ)^n in lexicographic order.
std::vector<Character> all_characters(int d, int n);

}  // namespace yhecke

#endif  // YHECKE_YOKONUMA_HPP
