#ifndef YHECKE_HECKE_HPP
#define YHECKE_HECKE_HPP

// The type A Iwahori-Hecke algebra H_n in the T_w basis, with
// T_i^2 = u^2 + v T_i, its parabolic subalgebras and the Markov trace.

#include <map>
#include <vector>

#include "yhecke/exactnum.hpp"
#include "yhecke/permcomp.hpp"

namespace yhecke {

class HeckeElem {
 public:
  using Terms = std::map<Perm, LPoly>;

  explicit HeckeElem(int n = 0);
  /// c * T_w.
  HeckeElem(const Perm& w, const LPoly& c);

  static HeckeElem scalar(int n, const LPoly& c) { return HeckeElem(Perm::identity(n), c); }
  static HeckeElem basis(const Perm& w) { return HeckeElem(w, LPoly(1)); }
  /// u^{-l(w)} T_w.
  static HeckeElem tilde(const Perm& w);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LPoly coeff(const Perm& w) const;

  /// this * T_i.
  HeckeElem times_gen(int i) const;
  /// T_i * this.
  HeckeElem gen_times(int i) const;

  /// this += c * x.
  void add_scaled(const HeckeElem& x, const LPoly& c);
  /// this += c * T_w.
  void add_term(const Perm& w, const LPoly& c);

  HeckeElem& operator+=(const HeckeElem& o);
  HeckeElem& operator-=(const HeckeElem& o);
  HeckeElem operator-() const;
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  friend HeckeElem operator*(const LPoly& c, const HeckeElem& x);
  friend HeckeElem operator*(const HeckeElem& x, const HeckeElem& y);
  friend bool operator==(const HeckeElem&, const HeckeElem&) = default;

  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

HeckeElem h_mul(const HeckeElem& x, const HeckeElem& y);
/// T_{word[0]} T_{word[1]} ...
HeckeElem t_from_word(int n, const std::vector<int>& word);
/// T_i^{-1} = u^{-2} T_i - u^{-2} v.
HeckeElem t_inverse_gen(int n, int i);
/// Product of T_{|k|}^{sign k} over a signed word.
HeckeElem t_from_signed_word(int n, const std::vector<int>& signed_word);

/// The normalized Markov trace: tau_n(1) = (v^{-1}(1-u^2))^{n-1}, tau_n(x T_{n-1}) = tau_{n-1}(x).
LPoly markov_tau(const HeckeElem& x);

/// An element of H^mu, stored inside H_{|mu|} and supported on S^mu.
class ParabolicElem {
 public:
  explicit ParabolicElem(const Composition& mu);
  /// Throws unless every permutation in the support of x preserves the blocks of mu.
  ParabolicElem(const Composition& mu, HeckeElem x);

  const Composition& mu() const { return mu_; }
  const HeckeElem& elem() const { return elem_; }
  bool is_zero() const { return elem_.is_zero(); }

  ParabolicElem& operator+=(const ParabolicElem& o);
  friend ParabolicElem operator+(ParabolicElem a, const ParabolicElem& b) { return a += b; }
  friend ParabolicElem operator*(const ParabolicElem& a, const ParabolicElem& b);
  friend bool operator==(const ParabolicElem&, const ParabolicElem&) = default;

 private:
  Composition mu_;
  HeckeElem elem_;
};

/// Splits w in S^mu into its block permutations (w_1, ..., w_d).
std::vector<Perm> split_blocks(const Perm& w, const Composition& mu);
/// Inverse of split_blocks.
Perm join_blocks(const std::vector<Perm>& blocks, const Composition& mu);

/// tau_{mu_1} (x) ... (x) tau_{mu_d}, extended linearly over the T basis.
LPoly tau_parabolic(const ParabolicElem& x);

}  // namespace yhecke

#endif  // YHECKE_HECKE_HPP
