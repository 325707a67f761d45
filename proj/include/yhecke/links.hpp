#ifndef YHECKE_LINKS_HPP
#define YHECKE_LINKS_HPP

// Framed braid words, their images in H_n and Y_{d,n}, and the link
// invariants obtained from Markov traces.
//
// Word syntax: whitespace-separated tokens. `K` (a nonzero integer) is
// sigma_{|K|}^{sign K}; `tJ^K` is t_J^K. The strand count n and the framing
// modulus d are always supplied by the caller.

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "yhecke/traces.hpp"

namespace yhecke {

struct BraidToken {
  enum class Kind { Sigma, Framing };
  Kind kind;
  int index;
  /// +1 or -1 for Sigma; the exponent reduced into [0, d) for Framing.
  int exp;

  friend bool operator==(const BraidToken&, const BraidToken&) = default;
};

class FramedBraidWord {
 public:
  /// Validates indices against n and reduces framing exponents mod d.
  FramedBraidWord(int n, int d, std::vector<BraidToken> tokens = {});
  static FramedBraidWord parse(std::string_view text, int n, int d = 1);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<BraidToken>& tokens() const { return tokens_; }
  bool is_unframed() const;

  FramedBraidWord inverse() const;
  /// Moves the first k tokens to the end.
  FramedBraidWord rotated(std::size_t k) const;
  /// The same word on n+1 strands followed by sigma_n^{sign}.
  FramedBraidWord stabilized(int sign) const;
  FramedBraidWord operator*(const FramedBraidWord& o) const;

  /// Canonical text, parseable by parse(); framings print reduced.
  std::string to_string() const;

  friend bool operator==(const FramedBraidWord&, const FramedBraidWord&) = default;

 private:
  int n_;
  int d_;
  std::vector<BraidToken> tokens_;
};

/// Product of the transpositions s_i of the sigma tokens, left to right.
Perm underlying_perm(const FramedBraidWord& w);
/// Number of components of the closure.
int component_count(const FramedBraidWord& w);

/// sigma_i -> T_i. Throws on framing tokens.
HeckeElem delta_H(const FramedBraidWord& w);
/// sigma_i -> (gamma + (1-gamma) e_i) g_i, sigma_i^{-1} -> (gamma^{-1} + (1-gamma^{-1}) e_i) g_i^{-1},
/// t_j -> t_j.
YElem delta_gamma(const FramedBraidWord& w);

/// Psi_mu(delta_gamma(w)) built from per-generator blocks, without Y_{d,n}.
Block delta_gamma_block(const FramedBraidWord& w, const Composition& mu);

/// rho_n(delta_gamma(w)), evaluated block by block over the compositions
/// whose base carries a nonzero parameter.
LPoly invariant_gamma(const FramedBraidWord& w, const TraceSpec& spec);
/// rho^mu(Tr Psi_mu(delta_gamma(w))) for a single composition mu.
LPoly block_contribution(const FramedBraidWord& w, const TraceSpec& spec, const Composition& mu);

/// tau_n(delta_H(w)). Throws on framing tokens.
LPoly homflypt(const FramedBraidWord& w);

/// invariant_gamma with the parameters of jl_spec(d, S).
LPoly jl_invariant(const FramedBraidWord& w, const std::vector<int>& S);
/// jl_invariant evaluated at ESystem::point(q, z, flip_branch).
std::complex<double> jl_numeric(const FramedBraidWord& w, const std::vector<int>& S, std::complex<double> q,
                                std::complex<double> z, bool flip_branch = false);

}  // namespace yhecke

#endif  // YHECKE_LINKS_HPP
