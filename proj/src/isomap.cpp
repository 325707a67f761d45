#include "yhecke/isomap.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace yhecke {

const OrbitData& orbit_data(const Composition& mu) {
  static std::mutex mu_lock;
  static std::map<Composition, std::unique_ptr<OrbitData>> cache;
  std::lock_guard<std::mutex> lock(mu_lock);
  auto it = cache.find(mu);
  if (it != cache.end()) return *it->second;
  auto od = std::make_unique<OrbitData>();
  od->mu = mu;
  od->chars = orbit(mu);
  for (std::size_t k = 0; k < od->chars.size(); ++k) {
    od->index.emplace(od->chars[k], static_cast<int>(k) + 1);
    od->pi.push_back(min_coset_rep(od->chars[k]));
    od->pi_inv.push_back(od->pi.back().inverse());
  }
  return *cache.emplace(mu, std::move(od)).first->second;
}

// ---------------------------------------------------------------------------

Block::Block(const Composition& mu) : mu_(mu), dim_(mu.multiplicity()) {}

HeckeElem Block::entry(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? HeckeElem(mu_.size()) : it->second;
}

void Block::add(int i, int j, const HeckeElem& x) {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) {
    throw std::invalid_argument("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside a block of size " + std::to_string(dim_));
  }
  ParabolicElem checked(mu_, x);
  add_unchecked(i, j, x);
}

void Block::add_unchecked(int i, int j, const HeckeElem& x) {
  if (x.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, x);
  if (inserted) return;
  it->second += x;
  if (it->second.is_zero()) entries_.erase(it);
}

void Block::scale_row(int i, const LPoly& c) {
  auto it = entries_.lower_bound({i, 0});
  while (it != entries_.end() && it->first.first == i) {
    it->second = c * it->second;
    if (it->second.is_zero()) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
}

ParabolicElem Block::trace() const {
  HeckeElem acc(mu_.size());
  for (const auto& [ij, x] : entries_) {
    if (ij.first == ij.second) acc += x;
  }
  return ParabolicElem(mu_, std::move(acc));
}

Block Block::identity(const Composition& mu) {
  Block b(mu);
  for (int k = 1; k <= b.dim_; ++k) b.entries_.emplace(std::make_pair(k, k), HeckeElem::scalar(mu.size(), 1));
  return b;
}

Block& Block::operator+=(const Block& o) {
  if (o.mu_ != mu_) throw std::invalid_argument("block composition mismatch");
  for (const auto& [ij, x] : o.entries_) add_unchecked(ij.first, ij.second, x);
  return *this;
}

Block operator*(const Block& a, const Block& b) {
  if (a.mu_ != b.mu_) throw std::invalid_argument("block composition mismatch");
  std::map<int, std::vector<std::pair<int, const HeckeElem*>>> rows;
  for (const auto& [ij, x] : b.entries_) rows[ij.first].emplace_back(ij.second, &x);
  Block c(a.mu_);
  for (const auto& [ik, x] : a.entries_) {
    auto it = rows.find(ik.second);
    if (it == rows.end()) continue;
    for (const auto& [j, y] : it->second) c.add_unchecked(ik.first, j, x * *y);
  }
  return c;
}

Block operator*(const LPoly& c, const Block& a) {
  Block r(a.mu_);
  for (const auto& [ij, x] : a.entries_) r.add_unchecked(ij.first, ij.second, c * x);
  return r;
}

// ---------------------------------------------------------------------------

BlockMatrix::BlockMatrix(int d, int n) : d_(d), n_(n) {
  if (d < 1 || n < 0) throw std::invalid_argument("bad block matrix shape");
}

void BlockMatrix::check_mu(const Composition& mu) const {
  if (mu.d() != d_ || mu.size() != n_) {
    throw std::invalid_argument("composition " + mu.to_string() + " does not index a block of level " +
                                std::to_string(n_) + " with d=" + std::to_string(d_));
  }
}

Block BlockMatrix::block(const Composition& mu) const {
  auto it = blocks_.find(mu);
  return it == blocks_.end() ? Block(mu) : it->second;
}

void BlockMatrix::add_entry(const Composition& mu, int i, int j, const HeckeElem& x) {
  check_mu(mu);
  Block b(mu);
  b.add(i, j, x);
  add_block(b);
}

void BlockMatrix::add_block(const Block& b) {
  check_mu(b.mu());
  if (b.is_zero()) return;
  auto [it, inserted] = blocks_.try_emplace(b.mu(), b);
  if (inserted) return;
  it->second += b;
  if (it->second.is_zero()) blocks_.erase(it);
}

BlockMatrix BlockMatrix::identity(int d, int n) {
  BlockMatrix m(d, n);
  for (const auto& mu : all_compositions(d, n)) m.blocks_.emplace(mu, Block::identity(mu));
  return m;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o) {
  if (o.d_ != d_ || o.n_ != n_) throw std::invalid_argument("block matrix shape mismatch");
  for (const auto& [mu, b] : o.blocks_) add_block(b);
  return *this;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.d_ != b.d_ || a.n_ != b.n_) throw std::invalid_argument("block matrix shape mismatch");
  BlockMatrix c(a.d_, a.n_);
  for (const auto& [mu, blk] : a.blocks_) {
    auto it = b.blocks_.find(mu);
    if (it != b.blocks_.end()) c.add_block(blk * it->second);
  }
  return c;
}

// ---------------------------------------------------------------------------

BlockMatrix psi(const YElem& x) {
  BlockMatrix out(x.d(), x.n());
  std::map<Composition, Block> blocks;
  for (const auto& [key, c] : to_E_basis(x)) {
    const auto& [chi, w] = key;
    Composition mu = chi.composition();
    const OrbitData& od = orbit_data(mu);
    int k = od.index_of(chi);
    int j = od.index_of(act(w.inverse(), chi));
    Perm p = od.pi_inv[static_cast<std::size_t>(k - 1)] * w * od.pi[static_cast<std::size_t>(j - 1)];
    auto it = blocks.try_emplace(mu, mu).first;
    it->second.add_unchecked(k, j, HeckeElem(p, c * LPoly::u(-length(p))));
  }
  for (const auto& [mu, b] : blocks) out.add_block(b);
  return out;
}

YElem phi(const BlockMatrix& m) {
  EBasis coeffs;
  for (const auto& [mu, b] : m.blocks()) {
    const OrbitData& od = orbit_data(mu);
    for (const auto& [ij, x] : b.entries()) {
      const auto [i, j] = ij;
      for (const auto& [p, c] : x.terms()) {
        if (!in_young_subgroup(p, mu)) {
          throw std::invalid_argument("entry T" + p.to_string() + " outside the parabolic subalgebra of " +
                                      mu.to_string());
        }
        // T_p = u^{l(p)} T~_p and T~_p M_{i,j} -> E_{chi_i} gt_{pi_i p pi_j^{-1}}.
        Perm w = od.pi[static_cast<std::size_t>(i - 1)] * p * od.pi_inv[static_cast<std::size_t>(j - 1)];
        LPoly& slot = coeffs[{od.chars[static_cast<std::size_t>(i - 1)], w}];
        slot += c * LPoly::u(length(p));
      }
    }
  }
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
  }
  return from_E_basis(m.d(), m.n(), coeffs);
}

HeckeElem embed_parabolic(const HeckeElem& x, const Composition& mu, int a) {
  const int n = mu.size();
  int p_end = 0;
  for (int b = 1; b <= a; ++b) p_end += mu.part(b);
  std::vector<int> f(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) f[static_cast<std::size_t>(i - 1)] = i <= p_end ? i : i + 1;
  f[static_cast<std::size_t>(n)] = p_end + 1;
  Perm fp(f), fi = fp.inverse();
  HeckeElem out(n + 1);
  for (const auto& [w, c] : x.terms()) out.add_term(fp * w.extended(n + 1) * fi, c);
  return out;
}

BlockMatrix iota(const BlockMatrix& m) {
  BlockMatrix out(m.d(), m.n() + 1);
  for (const auto& [mu, b] : m.blocks()) {
    const OrbitData& od = orbit_data(mu);
    for (int a = 1; a <= m.d(); ++a) {
      Composition up = mu.bump(a);
      const OrbitData& odu = orbit_data(up);
      Block nb(up);
      for (const auto& [ij, x] : b.entries()) {
        int i = odu.index_of(od.chars[static_cast<std::size_t>(ij.first - 1)].extended(a));
        int j = odu.index_of(od.chars[static_cast<std::size_t>(ij.second - 1)].extended(a));
        nb.add_unchecked(i, j, embed_parabolic(x, mu, a));
      }
      out.add_block(nb);
    }
  }
  return out;
}

Block psi_generator_block(const Composition& mu, YGen gen) {
  const int n = mu.size(), d = mu.d();
  const OrbitData& od = orbit_data(mu);
  const int i = gen.index;
  const bool strand = gen.kind == YGen::Kind::T || gen.kind == YGen::Kind::TInv;
  if (i < 1 || i > (strand ? n : n - 1)) throw std::invalid_argument("generator index out of range");
  Block b(mu);
  auto scalar = [&](const LPoly& c) { return HeckeElem::scalar(n, c); };
  auto gt_row = [&](int k, const LPoly& scale) {
    Perm s = Perm::simple(n, i);
    int j = od.index_of(act(s, od.chars[static_cast<std::size_t>(k - 1)]));
    Perm p = od.pi_inv[static_cast<std::size_t>(k - 1)] * s * od.pi[static_cast<std::size_t>(j - 1)];
    b.add_unchecked(k, j, HeckeElem(p, scale * LPoly::u(-length(p))));
  };
  for (int k = 1; k <= od.size(); ++k) {
    const Character& chi = od.chars[static_cast<std::size_t>(k - 1)];
    const bool same = !strand && chi.letter(i) == chi.letter(i + 1);
    switch (gen.kind) {
      case YGen::Kind::T:
        b.add_unchecked(k, k, scalar(LPoly(root_power(d, chi.letter(i), 1))));
        break;
      case YGen::Kind::TInv:
        b.add_unchecked(k, k, scalar(LPoly(root_power(d, chi.letter(i), -1))));
        break;
      case YGen::Kind::E:
        if (same) b.add_unchecked(k, k, scalar(1));
        break;
      case YGen::Kind::GTilde:
        gt_row(k, LPoly(1));
        break;
      case YGen::Kind::G:
        gt_row(k, LPoly::u());
        break;
      case YGen::Kind::GTildeInv:
        gt_row(k, LPoly(1));
        if (same) b.add_unchecked(k, k, scalar(-LPoly::monomial(Cyclo(1), -1, 1, 0)));
        break;
      case YGen::Kind::GInv:
        gt_row(k, LPoly::u(-1));
        if (same) b.add_unchecked(k, k, scalar(-LPoly::monomial(Cyclo(1), -2, 1, 0)));
        break;
    }
  }
  return b;
}

BlockMatrix psi_generator(int d, int n, YGen gen) {
  BlockMatrix m(d, n);
  for (const auto& mu : all_compositions(d, n)) m.add_block(psi_generator_block(mu, gen));
  return m;
}

}  // namespace yhecke
