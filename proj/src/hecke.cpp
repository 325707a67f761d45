#include "yhecke/hecke.hpp"

#include <cassert>
#include <stdexcept>

namespace yhecke {

HeckeElem::HeckeElem(int n) : n_(n) {
  if (n < 0 || n > kMaxStrands) throw std::invalid_argument("bad strand count");
}

HeckeElem::HeckeElem(const Perm& w, const LPoly& c) : n_(w.size()) {
  if (!c.is_zero()) terms_.emplace(w, c);
}

HeckeElem HeckeElem::tilde(const Perm& w) { return HeckeElem(w, LPoly::u(-length(w))); }

LPoly HeckeElem::coeff(const Perm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LPoly() : it->second;
}

void HeckeElem::add_term(const Perm& w, const LPoly& c) {
  if (w.size() != n_) throw std::invalid_argument("Hecke element size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void HeckeElem::add_scaled(const HeckeElem& x, const LPoly& c) {
  if (x.n_ != n_) throw std::invalid_argument("Hecke element size mismatch");
  for (const auto& [w, a] : x.terms_) add_term(w, a * c);
}

HeckeElem HeckeElem::times_gen(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
  HeckeElem r(n_);
  const LPoly u2 = LPoly::u(2), v = LPoly::v();
  for (const auto& [w, c] : terms_) {
    Perm ws = w.times_simple(i);
    if (!w.right_descent(i)) {
      r.add_term(ws, c);
    } else {
      r.add_term(ws, u2 * c);
      r.add_term(w, v * c);
    }
  }
  return r;
}

HeckeElem HeckeElem::gen_times(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
  HeckeElem r(n_);
  const LPoly u2 = LPoly::u(2), v = LPoly::v();
  for (const auto& [w, c] : terms_) {
    Perm sw = w.simple_times(i);
    if (!w.left_descent(i)) {
      r.add_term(sw, c);
    } else {
      r.add_term(sw, u2 * c);
      r.add_term(w, v * c);
    }
  }
  return r;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  if (o.n_ != n_) throw std::invalid_argument("Hecke element size mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) { return *this += -o; }

HeckeElem HeckeElem::operator-() const {
  HeckeElem r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

HeckeElem operator*(const LPoly& c, const HeckeElem& x) {
  HeckeElem r(x.n_);
  r.add_scaled(x, c);
  return r;
}

HeckeElem operator*(const HeckeElem& x, const HeckeElem& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("Hecke element size mismatch");
  HeckeElem r(x.n_);
  for (const auto& [w, c] : y.terms_) {
    HeckeElem cur = x;
    for (int i : reduced_word(w)) cur = cur.times_gen(i);
    r.add_scaled(cur, c);
  }
  return r;
}

std::string HeckeElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*T" + w.to_string();
  }
  return s;
}

HeckeElem h_mul(const HeckeElem& x, const HeckeElem& y) { return x * y; }

HeckeElem t_from_word(int n, const std::vector<int>& word) {
  HeckeElem r = HeckeElem::scalar(n, 1);
  for (int i : word) r = r.times_gen(i);
  return r;
}

HeckeElem t_inverse_gen(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  HeckeElem r(Perm::simple(n, i), LPoly::u(-2));
  r.add_term(Perm::identity(n), -LPoly::monomial(Cyclo(1), -2, 1, 0));
  return r;
}

HeckeElem t_from_signed_word(int n, const std::vector<int>& signed_word) {
  HeckeElem r = HeckeElem::scalar(n, 1);
  for (int k : signed_word) {
    if (k == 0) throw std::invalid_argument("zero is not a braid generator");
    r = k > 0 ? r.times_gen(k) : r * t_inverse_gen(n, -k);
  }
  return r;
}

namespace {

class TauEvaluator {
 public:
  LPoly operator()(const HeckeElem& x) {
    LPoly acc;
    for (const auto& [w, c] : x.terms()) acc += c * basis(w);
    return acc;
  }

 private:
  const LPoly& basis(const Perm& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(w, compute(w)).first->second;
  }

  LPoly compute(const Perm& w) {
    const int n = w.size();
    if (n <= 1) return LPoly(1);
    if (w(n) == n) return strand_ * basis(w.restricted(n - 1));
    // w = a * s_{n-1} * y with a = w s_j ... s_{n-1} in S_{n-1} and y = s_{n-2} ... s_j.
    const int j = w.inverse()(n);
    Perm a = w;
    for (int i = j; i < n; ++i) a = a.times_simple(i);
    Perm a_small = a.restricted(n - 1);
    HeckeElem prod = HeckeElem::basis(a_small);
    for (int i = n - 2; i >= j; --i) prod = prod.times_gen(i);
    if (length(a) + (n - j) != length(w)) {
      throw std::logic_error("markov_tau: coset factorization is not length additive");
    }
    return (*this)(prod);
  }

  LPoly strand_ = strand_factor();
  std::map<Perm, LPoly> memo_;
};

}  // namespace

LPoly markov_tau(const HeckeElem& x) { return TauEvaluator{}(x); }

// ---------------------------------------------------------------------------

ParabolicElem::ParabolicElem(const Composition& mu) : mu_(mu), elem_(mu.size()) {}

ParabolicElem::ParabolicElem(const Composition& mu, HeckeElem x) : mu_(mu), elem_(std::move(x)) {
  if (elem_.n() != mu_.size()) throw std::invalid_argument("parabolic element size mismatch");
  for (const auto& [w, c] : elem_.terms()) {
    if (!in_young_subgroup(w, mu_)) {
      throw std::invalid_argument("T" + w.to_string() + " is not in the parabolic subalgebra of " +
                                  mu_.to_string());
    }
  }
}

ParabolicElem& ParabolicElem::operator+=(const ParabolicElem& o) {
  if (o.mu_ != mu_) throw std::invalid_argument("parabolic composition mismatch");
  elem_ += o.elem_;
  return *this;
}

ParabolicElem operator*(const ParabolicElem& a, const ParabolicElem& b) {
  if (a.mu_ != b.mu_) throw std::invalid_argument("parabolic composition mismatch");
  ParabolicElem r(a.mu_);
  r.elem_ = a.elem_ * b.elem_;
  return r;
}

std::vector<Perm> split_blocks(const Perm& w, const Composition& mu) {
  std::vector<Perm> out;
  int start = 1;
  for (int p : mu.parts()) {
    std::vector<int> img(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
      int x = w(start + i) - start + 1;
      if (x < 1 || x > p) throw std::invalid_argument("permutation does not preserve the blocks");
      img[static_cast<std::size_t>(i)] = x;
    }
    out.emplace_back(img);
    start += p;
  }
  return out;
}

Perm join_blocks(const std::vector<Perm>& blocks, const Composition& mu) {
  if (static_cast<int>(blocks.size()) != mu.d()) throw std::invalid_argument("block count mismatch");
  std::vector<int> img;
  int start = 0;
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    if (blocks[a].size() != mu.parts()[a]) throw std::invalid_argument("block size mismatch");
    for (int i = 1; i <= blocks[a].size(); ++i) img.push_back(blocks[a](i) + start);
    start += blocks[a].size();
  }
  return Perm(img);
}

LPoly tau_parabolic(const ParabolicElem& x) {
  TauEvaluator tau;
  LPoly acc;
  for (const auto& [w, c] : x.elem().terms()) {
    LPoly t = c;
    for (const Perm& b : split_blocks(w, x.mu())) t *= tau(HeckeElem::basis(b));
    acc += t;
  }
  return acc;
}

}  // namespace yhecke
