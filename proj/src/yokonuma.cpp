#include "yhecke/yokonuma.hpp"

#include <stdexcept>

namespace yhecke {

namespace {

void check_strand(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("strand index " + std::to_string(j) + " out of range");
}

void check_gen(int n, int i) {
  if (i < 1 || i >= n) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n - 1));
  }
}

std::uint8_t shifted(std::uint8_t k, long long s, int d) {
  long long r = (static_cast<long long>(k) + s) % d;
  return static_cast<std::uint8_t>(r < 0 ? r + d : r);
}

// u^{-1} v / d, the coefficient produced by each e-term of a length-decreasing product.
LPoly e_correction(int d) { return LPoly::monomial(Cyclo(Rat(1, d)), -1, 1, 0); }

// Adds c/d * sum_s t_a^s t_b^{-s} t^k gt_w (written as a framing shift).
void add_e_shifts(YElem& out, YKey key, int a, int b, const LPoly& c, int d) {
  for (int s = 0; s < d; ++s) {
    YKey k2 = key;
    k2.k[static_cast<std::size_t>(a - 1)] = shifted(key.k[static_cast<std::size_t>(a - 1)], s, d);
    k2.k[static_cast<std::size_t>(b - 1)] = shifted(key.k[static_cast<std::size_t>(b - 1)], -s, d);
    out.add_term(k2, c);
  }
}

YElem right_t(const YElem& x, int j, long long s) {
  check_strand(x.n(), j);
  YElem r(x.d(), x.n());
  for (const auto& [key, c] : x.terms()) {
    YKey k2 = key;
    auto& slot = k2.k[static_cast<std::size_t>(key.w(j) - 1)];
    slot = shifted(slot, s, x.d());
    r.add_term(k2, c);
  }
  return r;
}

YElem left_t(const YElem& x, int j, long long s) {
  check_strand(x.n(), j);
  YElem r(x.d(), x.n());
  for (const auto& [key, c] : x.terms()) {
    YKey k2 = key;
    auto& slot = k2.k[static_cast<std::size_t>(j - 1)];
    slot = shifted(slot, s, x.d());
    r.add_term(k2, c);
  }
  return r;
}

YElem right_e(const YElem& x, int i) {
  check_gen(x.n(), i);
  YElem r(x.d(), x.n());
  const LPoly scale(Cyclo(Rat(1, x.d())));
  for (const auto& [key, c] : x.terms()) add_e_shifts(r, key, key.w(i), key.w(i + 1), c * scale, x.d());
  return r;
}

YElem left_e(const YElem& x, int i) {
  check_gen(x.n(), i);
  YElem r(x.d(), x.n());
  const LPoly scale(Cyclo(Rat(1, x.d())));
  for (const auto& [key, c] : x.terms()) add_e_shifts(r, key, i, i + 1, c * scale, x.d());
  return r;
}

YElem right_gt(const YElem& x, int i) {
  check_gen(x.n(), i);
  YElem r(x.d(), x.n());
  const LPoly corr = e_correction(x.d());
  for (const auto& [key, c] : x.terms()) {
    YKey k2{key.k, key.w.times_simple(i)};
    r.add_term(k2, c);
    // gt_w gt_i = gt_{ws_i} + u^{-1} v gt_w e_i when the length drops, and
    // gt_w e_i = e_{w(i), w(i+1)} gt_w.
    if (key.w.right_descent(i)) add_e_shifts(r, key, key.w(i), key.w(i + 1), c * corr, x.d());
  }
  return r;
}

YElem left_gt(const YElem& x, int i) {
  check_gen(x.n(), i);
  YElem r(x.d(), x.n());
  const LPoly corr = e_correction(x.d());
  for (const auto& [key, c] : x.terms()) {
    // gt_i t^k = t^{s_i(k)} gt_i.
    YKey k2 = key;
    std::swap(k2.k[static_cast<std::size_t>(i - 1)], k2.k[static_cast<std::size_t>(i)]);
    YKey moved{k2.k, key.w.simple_times(i)};
    r.add_term(moved, c);
    if (key.w.left_descent(i)) add_e_shifts(r, k2, i, i + 1, c * corr, x.d());
  }
  return r;
}

YElem mul_gen(const YElem& x, YGen gen, Side side) {
  const bool left = side == Side::Left;
  const int i = gen.index;
  switch (gen.kind) {
    case YGen::Kind::T:
      return left ? left_t(x, i, 1) : right_t(x, i, 1);
    case YGen::Kind::TInv:
      return left ? left_t(x, i, -1) : right_t(x, i, -1);
    case YGen::Kind::GTilde:
      return left ? left_gt(x, i) : right_gt(x, i);
    case YGen::Kind::G:
      return LPoly::u() * (left ? left_gt(x, i) : right_gt(x, i));
    case YGen::Kind::E:
      return left ? left_e(x, i) : right_e(x, i);
    case YGen::Kind::GTildeInv: {
      // gt_i^{-1} = gt_i - u^{-1} v e_i.
      YElem a = left ? left_gt(x, i) : right_gt(x, i);
      YElem b = left ? left_e(x, i) : right_e(x, i);
      return a - LPoly::monomial(Cyclo(1), -1, 1, 0) * b;
    }
    case YGen::Kind::GInv: {
      // g_i^{-1} = u^{-2} g_i - u^{-2} v e_i = u^{-1} gt_i - u^{-2} v e_i.
      YElem a = left ? left_gt(x, i) : right_gt(x, i);
      YElem b = left ? left_e(x, i) : right_e(x, i);
      return LPoly::u(-1) * a - LPoly::monomial(Cyclo(1), -2, 1, 0) * b;
    }
  }
  throw std::logic_error("unknown generator kind");
}

Cyclo d_power_inverse(int d, int n) {
  Rat r(1);
  for (int i = 0; i < n; ++i) r /= d;
  return Cyclo(r);
}

std::size_t int_pow(int d, int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<std::size_t>(d);
  return r;
}

// One axis of a separable transform over a dense d^n array, axis 0 most
// significant: out[.., b, ..] = sum_a in[.., a, ..] * kernel[b][a].
void transform_axis(std::vector<LPoly>& data, int d, int n, int axis,
                    const std::vector<std::vector<Cyclo>>& kernel) {
  std::size_t stride = int_pow(d, n - 1 - axis);
  std::size_t block = stride * static_cast<std::size_t>(d);
  std::vector<LPoly> col(static_cast<std::size_t>(d));
  for (std::size_t base = 0; base < data.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      bool any = false;
      for (int a = 0; a < d; ++a) {
        col[static_cast<std::size_t>(a)] = data[base + off + static_cast<std::size_t>(a) * stride];
        any = any || !col[static_cast<std::size_t>(a)].is_zero();
      }
      if (!any) continue;
      for (int b = 0; b < d; ++b) {
        LPoly acc;
        for (int a = 0; a < d; ++a) {
          const LPoly& c = col[static_cast<std::size_t>(a)];
          if (!c.is_zero()) acc.add_scaled(c, kernel[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)], {0, 0, 0});
        }
        data[base + off + static_cast<std::size_t>(b) * stride] = std::move(acc);
      }
    }
  }
}

}  // namespace

YElem::YElem(int d, int n) : d_(d), n_(n) {
  if (d < 1 || d > 255) throw std::invalid_argument("d must be in 1..255");
  if (n < 0 || n > kMaxStrands) throw std::invalid_argument("bad strand count");
}

YElem YElem::scalar(int d, int n, const LPoly& c) {
  YElem r(d, n);
  r.add_term(YKey{Framing{}, Perm::identity(n)}, c);
  return r;
}

YElem YElem::term(int d, const std::vector<int>& k, const Perm& w, const LPoly& c) {
  if (static_cast<int>(k.size()) != w.size()) throw std::invalid_argument("framing length mismatch");
  YElem r(d, w.size());
  YKey key{Framing{}, w};
  for (std::size_t j = 0; j < k.size(); ++j) key.k[j] = shifted(0, k[j], d);
  r.add_term(key, c);
  return r;
}

YElem YElem::generator(int d, int n, YGen gen) { return mul_gen(one(d, n), gen, Side::Right); }

LPoly YElem::coeff(const std::vector<int>& k, const Perm& w) const {
  YKey key{Framing{}, w};
  for (std::size_t j = 0; j < k.size(); ++j) key.k[j] = shifted(0, k[j], d_);
  auto it = terms_.find(key);
  return it == terms_.end() ? LPoly() : it->second;
}

void YElem::add_term(const YKey& key, const LPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void YElem::add_scaled(const YElem& x, const LPoly& c) {
  if (x.d_ != d_ || x.n_ != n_) throw std::invalid_argument("Yokonuma element size mismatch");
  for (const auto& [key, a] : x.terms_) add_term(key, a * c);
}

YElem& YElem::operator+=(const YElem& o) {
  if (o.d_ != d_ || o.n_ != n_) throw std::invalid_argument("Yokonuma element size mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

YElem& YElem::operator-=(const YElem& o) { return *this += -o; }

YElem YElem::operator-() const {
  YElem r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

YElem operator*(const LPoly& c, const YElem& x) {
  YElem r(x.d_, x.n_);
  if (c.is_zero()) return r;
  for (const auto& [key, a] : x.terms_) r.terms_.emplace(key, c * a);
  return r;
}

YElem operator*(const YElem& x, const YElem& y) {
  if (x.d_ != y.d_ || x.n_ != y.n_) throw std::invalid_argument("Yokonuma element size mismatch");
  const int d = x.d_, n = x.n_;
  // Group the right factor by permutation: x * (sum_k c_k t^k) * gt_w.
  std::map<Perm, std::vector<std::pair<Framing, LPoly>>> by_perm;
  for (const auto& [key, c] : y.terms_) by_perm[key.w].emplace_back(key.k, c);
  YElem r(d, n);
  for (const auto& [w, framed] : by_perm) {
    YElem cur(d, n);
    for (const auto& [k, c] : framed) {
      for (const auto& [xkey, a] : x.terms_) {
        // t^{k'} gt_{w'} t^k = t^{k' + w'(k)} gt_{w'}.
        YKey nk = xkey;
        for (int j = 1; j <= n; ++j) {
          auto& slot = nk.k[static_cast<std::size_t>(xkey.w(j) - 1)];
          slot = shifted(slot, k[static_cast<std::size_t>(j - 1)], d);
        }
        cur.add_term(nk, a * c);
      }
    }
    for (int i : reduced_word(w)) cur = right_gt(cur, i);
    r += cur;
  }
  return r;
}

YElem YElem::embedded(int m) const {
  YElem r(d_, m);
  for (const auto& [key, c] : terms_) r.terms_.emplace(YKey{key.k, key.w.extended(m)}, c);
  return r;
}

std::string YElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*t(";
    for (int j = 0; j < n_; ++j) s += (j ? "," : "") + std::to_string(key.k[static_cast<std::size_t>(j)]);
    s += ")*gt" + key.w.to_string();
  }
  return s;
}

YElem y_mul_gen(const YElem& x, YGen gen, Side side) { return mul_gen(x, gen, side); }

YElem y_mul(const YElem& x, const YElem& y) { return x * y; }

YElem idempotent_E(const Character& chi) {
  const int d = chi.d(), n = chi.size();
  YElem r(d, n);
  const Cyclo scale = d_power_inverse(d, n);
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  for (std::size_t idx = 0; idx < int_pow(d, n); ++idx) {
    std::size_t rest = idx;
    for (int j = n - 1; j >= 0; --j) {
      k[static_cast<std::size_t>(j)] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    Cyclo c = scale;
    for (int j = 1; j <= n; ++j) c *= root_power(d, chi.letter(j), -k[static_cast<std::size_t>(j - 1)]);
    YKey key{Framing{}, Perm::identity(n)};
    for (int j = 0; j < n; ++j) key.k[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(k[static_cast<std::size_t>(j)]);
    r.add_term(key, LPoly(c));
  }
  return r;
}

YElem idempotent_Emu(const Composition& mu) {
  YElem r(mu.d(), mu.size());
  for (const Character& chi : orbit(mu)) r += idempotent_E(chi);
  return r;
}

std::vector<Character> all_characters(int d, int n) {
  std::vector<Character> out;
  std::vector<int> letters(static_cast<std::size_t>(n), 1);
  for (;;) {
    out.emplace_back(d, letters);
    int j = n - 1;
    while (j >= 0 && letters[static_cast<std::size_t>(j)] == d) letters[static_cast<std::size_t>(j--)] = 1;
    if (j < 0) break;
    ++letters[static_cast<std::size_t>(j)];
  }
  return out;
}

EBasis to_E_basis(const YElem& x) {
  const int d = x.d(), n = x.n();
  const std::size_t size = int_pow(d, n);
  // t^k = sum_chi chi(t^k) E_chi, so the E_chi coefficient is sum_k c_k prod xi_{a_j}^{k_j}.
  std::vector<std::vector<Cyclo>> kernel(static_cast<std::size_t>(d), std::vector<Cyclo>(static_cast<std::size_t>(d)));
  for (int a = 1; a <= d; ++a) {
    for (int k = 0; k < d; ++k) kernel[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(k)] = root_power(d, a, k);
  }
  std::map<Perm, std::vector<LPoly>> dense;
  for (const auto& [key, c] : x.terms()) {
    auto& vec = dense[key.w];
    if (vec.empty()) vec.resize(size);
    std::size_t idx = 0;
    for (int j = 0; j < n; ++j) idx = idx * static_cast<std::size_t>(d) + key.k[static_cast<std::size_t>(j)];
    vec[idx] = c;
  }
  std::vector<Character> chars = all_characters(d, n);
  EBasis out;
  for (auto& [w, vec] : dense) {
    for (int axis = 0; axis < n; ++axis) transform_axis(vec, d, n, axis, kernel);
    for (std::size_t idx = 0; idx < size; ++idx) {
      if (!vec[idx].is_zero()) out.emplace(std::make_pair(chars[idx], w), std::move(vec[idx]));
    }
  }
  return out;
}

YElem from_E_basis(int d, int n, const EBasis& coeffs) {
  const std::size_t size = int_pow(d, n);
  // E_chi = d^{-n} sum_k prod xi_{a_j}^{-k_j} t^k.
  std::vector<std::vector<Cyclo>> kernel(static_cast<std::size_t>(d), std::vector<Cyclo>(static_cast<std::size_t>(d)));
  for (int k = 0; k < d; ++k) {
    for (int a = 1; a <= d; ++a) {
      kernel[static_cast<std::size_t>(k)][static_cast<std::size_t>(a - 1)] = root_power(d, a, -k) * Cyclo(Rat(1, d));
    }
  }
  std::map<Perm, std::vector<LPoly>> dense;
  for (const auto& [key, c] : coeffs) {
    const auto& [chi, w] = key;
    if (chi.d() != d || chi.size() != n || w.size() != n) {
      throw std::invalid_argument("E-basis entry does not match Y_{d,n}");
    }
    auto& vec = dense[w];
    if (vec.empty()) vec.resize(size);
    std::size_t idx = 0;
    for (int j = 1; j <= n; ++j) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(chi.letter(j) - 1);
    vec[idx] += c;
  }
  YElem r(d, n);
  for (auto& [w, vec] : dense) {
    for (int axis = 0; axis < n; ++axis) transform_axis(vec, d, n, axis, kernel);
    for (std::size_t idx = 0; idx < size; ++idx) {
      if (vec[idx].is_zero()) continue;
      YKey key{Framing{}, w};
      std::size_t rest = idx;
      for (int j = n - 1; j >= 0; --j) {
        key.k[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(rest % static_cast<std::size_t>(d));
        rest /= static_cast<std::size_t>(d);
      }
      r.add_term(key, vec[idx]);
    }
  }
  return r;
}

}  // namespace yhecke
