#ifndef YHECKE_TRACES_HPP
#define YHECKE_TRACES_HPP

// Markov traces on {Y_{d,n}}. Every one of them is determined by parameters
// alpha_{mu0}, one per composition mu0 with parts in {0,1}:
//
//   rho_n(x) = sum_mu alpha_{[mu]} (tau_{mu_1} (x) ... (x) tau_{mu_d})(Tr Psi_mu(E_mu x)).

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "yhecke/isomap.hpp"

namespace yhecke {

class TraceSpec {
 public:
  explicit TraceSpec(int d);

  int d() const { return d_; }
  /// Only nonzero parameters are stored.
  const std::map<Composition, LPoly>& alphas() const { return alphas_; }
  /// alpha_{mu0}, zero when unset.
  LPoly alpha(const Composition& mu0) const;
  /// Throws unless mu0 has d parts in {0,1} and is nonzero.
  void set(const Composition& mu0, const LPoly& alpha);

  /// One `mu0 = (b_1,...,b_d) ; alpha = <poly>` line per nonzero parameter.
  std::string to_text() const;
  /// Inverse of to_text(); blank lines and lines starting with '#' are skipped.
  static TraceSpec parse(std::string_view text, int d);

  TraceSpec& operator+=(const TraceSpec& o);
  friend TraceSpec operator+(TraceSpec a, const TraceSpec& b) { return a += b; }
  friend TraceSpec operator*(const LPoly& c, const TraceSpec& s);
  friend bool operator==(const TraceSpec&, const TraceSpec&) = default;

 private:
  int d_;
  std::map<Composition, LPoly> alphas_;
};

/// The basis trace rho_{mu0}: alpha_{mu0} = 1, all others 0.
TraceSpec basic_spec(const Composition& mu0);
/// basic_spec for every element of Comp0_d, in basic_compositions order.
std::vector<TraceSpec> all_basic_specs(int d);

/// rho^mu = alpha_{[mu]} tau_{mu_1} (x) ... (x) tau_{mu_d} on H^mu.
LPoly associated_trace(const TraceSpec& spec, const ParabolicElem& x);
/// rho^mu(Tr b): the contribution of one block to rho_n.
LPoly block_contribution(const TraceSpec& spec, const Block& b);
LPoly rho_blocks(const TraceSpec& spec, const BlockMatrix& m);
LPoly rho(const TraceSpec& spec, const YElem& x);

/// sum_mu tau^mu(Tr Psi_mu(x)) with tau^mu(T~_w) = delta_{w,1} on each factor.
LPoly symmetrizing_rho(const YElem& x);
/// d^n times the coefficient of t^0 gt_1.
LPoly symmetrizing_tilde(const YElem& x);

/// Parameters attached to a non-empty set S of d-th roots of unity, each
/// given by its index a in 1..d (xi_a = zeta^{a-1}).
class ESystem {
 public:
  /// Throws on an empty S, an index outside 1..d or a repeated index.
  ESystem(int d, std::vector<int> S);

  int d() const { return d_; }
  const std::vector<int>& S() const { return S_; }

  /// c_b = (1/|S|) sum_{a in S} xi_a^b.
  Cyclo c(long long b) const;
  /// alpha_{mu0} = (v^{-1}(1-u^2))^{|mu0|-1} / |S| when supp(mu0) lies in S, else 0.
  TraceSpec spec() const;

  struct Point {
    std::complex<double> u, v, gamma;
  };
  /// u = sqrt(q lambda_S), v = (q-1) sqrt(lambda_S), gamma = q^{-1/2} with
  /// lambda_S = (z + (1-q)/|S|) / (q z). flip_branch negates sqrt(lambda_S).
  /// Throws std::domain_error when q, z or lambda_S vanish.
  Point point(std::complex<double> q, std::complex<double> z, bool flip_branch = false) const;

 private:
  int d_;
  std::vector<int> S_;
};

Cyclo esystem_c(int d, const std::vector<int>& S, long long b);
TraceSpec jl_spec(int d, const std::vector<int>& S);

/// prod_{1<=m<=n} (1 + q^2 + ... + q^{2m-2}) != 0.
bool semisimple_at(int n, std::complex<double> q, double tol = 1e-12);
bool semisimple_at(int n, const Cyclo& q);
/// q as a Laurent polynomial (e.g. LPoly::u()); nonzero means generically semisimple.
bool semisimple_at(int n, const LPoly& q);

}  // namespace yhecke

#endif  // YHECKE_TRACES_HPP
