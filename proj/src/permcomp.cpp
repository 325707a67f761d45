#include "yhecke/permcomp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace yhecke {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxStrands) {
    throw std::invalid_argument("strand count " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxStrands));
  }
}

void check_generator(int n, int i) {
  if (i < 1 || i >= n) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n - 1));
  }
}

std::string join(const std::vector<int>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + ")";
}

}  // namespace

Perm::Perm(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  check_size(n);
  n_ = static_cast<std::uint8_t>(n);
  std::vector<bool> seen(images.size() + 1, false);
  for (int i = 0; i < n; ++i) {
    int x = images[static_cast<std::size_t>(i)];
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation: " + join(images));
    }
    seen[static_cast<std::size_t>(x)] = true;
    img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
  }
}

Perm Perm::identity(int n) {
  check_size(n);
  Perm p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Perm Perm::simple(int n, int i) {
  check_generator(n, i);
  return identity(n).times_simple(i);
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
  Perm p = identity(n);
  for (int i : word) {
    check_generator(n, i);
    p = p.times_simple(i);
  }
  return p;
}

std::vector<int> Perm::images() const { return {img_.begin(), img_.begin() + n_}; }

bool Perm::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (img_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    p.img_[img_[static_cast<std::size_t>(i)] - 1u] = static_cast<std::uint8_t>(i + 1);
  }
  return p;
}

Perm Perm::times_simple(int i) const {
  Perm p = *this;
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
  return p;
}

Perm Perm::simple_times(int i) const {
  Perm p = *this;
  for (int k = 0; k < n_; ++k) {
    auto& x = p.img_[static_cast<std::size_t>(k)];
    if (x == i) {
      x = static_cast<std::uint8_t>(i + 1);
    } else if (x == i + 1) {
      x = static_cast<std::uint8_t>(i);
    }
  }
  return p;
}

bool Perm::left_descent(int i) const {
  int a = 0, b = 0;
  for (int k = 0; k < n_; ++k) {
    if (img_[static_cast<std::size_t>(k)] == i) a = k;
    if (img_[static_cast<std::size_t>(k)] == i + 1) b = k;
  }
  return a > b;
}

Perm Perm::extended(int m) const {
  check_size(m);
  if (m < n_) throw std::invalid_argument("cannot extend a permutation to fewer points");
  Perm p = *this;
  p.n_ = static_cast<std::uint8_t>(m);
  for (int i = n_; i < m; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Perm Perm::restricted(int m) const {
  if (m > n_ || m < 0) throw std::invalid_argument("bad restriction size");
  for (int i = m; i < n_; ++i) {
    if (img_[static_cast<std::size_t>(i)] != i + 1) {
      throw std::invalid_argument("permutation " + to_string() + " does not fix the points above " +
                                  std::to_string(m));
    }
  }
  Perm p = *this;
  p.n_ = static_cast<std::uint8_t>(m);
  for (int i = m; i < n_; ++i) p.img_[static_cast<std::size_t>(i)] = 0;
  return p;
}

std::string Perm::to_string() const {
  std::string s = join(images());
  s.front() = '[';
  s.back() = ']';
  return s;
}

Perm operator*(const Perm& v, const Perm& w) {
  if (v.n_ != w.n_) throw std::invalid_argument("permutation size mismatch");
  Perm p;
  p.n_ = v.n_;
  for (int i = 0; i < v.n_; ++i) {
    p.img_[static_cast<std::size_t>(i)] = v.img_[w.img_[static_cast<std::size_t>(i)] - 1u];
  }
  return p;
}

int length(const Perm& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) inv += w(i) > w(j) ? 1 : 0;
  }
  return inv;
}

std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> word;
  Perm cur = w;
  for (;;) {
    int i = 1;
    while (i < cur.size() && !cur.left_descent(i)) ++i;
    if (i >= cur.size()) break;
    word.push_back(i);
    cur = cur.simple_times(i);
  }
  return word;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

int cycle_count(const Perm& w) {
  std::vector<bool> seen(static_cast<std::size_t>(w.size()) + 1, false);
  int cycles = 0;
  for (int i = 1; i <= w.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = w(j)) seen[static_cast<std::size_t>(j)] = true;
  }
  return cycles;
}

// ---------------------------------------------------------------------------

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a composition needs at least one part");
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("negative part in composition " + join(parts_));
    size_ += p;
  }
}

Composition Composition::base() const {
  std::vector<int> b = parts_;
  for (int& p : b) p = p > 0 ? 1 : 0;
  return Composition(std::move(b));
}

Composition Composition::bump(int a) const {
  if (a < 1 || a > d()) throw std::invalid_argument("part index out of range");
  std::vector<int> b = parts_;
  ++b[static_cast<std::size_t>(a - 1)];
  return Composition(std::move(b));
}

Composition Composition::unbump(int a) const {
  if (a < 1 || a > d()) throw std::invalid_argument("part index out of range");
  if (part(a) == 0) {
    throw std::invalid_argument("cannot remove a strand from empty part " + std::to_string(a) +
                                " of " + to_string());
  }
  std::vector<int> b = parts_;
  --b[static_cast<std::size_t>(a - 1)];
  return Composition(std::move(b));
}

long long Composition::multiplicity() const {
  // Product of binomials C(running total, part).
  long long m = 1;
  int total = 0;
  for (int p : parts_) {
    for (int k = 1; k <= p; ++k) m = m * (total + k) / k;
    total += p;
  }
  return m;
}

bool Composition::is_basic() const {
  return size_ >= 1 && std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0 || p == 1; });
}

int Composition::support_size() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Composition::block_start(int a) const {
  int s = 1;
  for (int b = 1; b < a; ++b) s += part(b);
  return s;
}

std::string Composition::to_string() const { return join(parts_); }

std::vector<Composition> all_compositions(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("all_compositions: need d >= 1 and n >= 0");
  std::vector<Composition> out;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == d - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.emplace_back(cur);
      return;
    }
    for (int p = left; p >= 0; --p) {
      cur[static_cast<std::size_t>(pos)] = p;
      self(self, pos + 1, left - p);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<Composition> basic_compositions(int d) {
  std::vector<Composition> out;
  for (int k = 1; k <= d; ++k) {
    for (const Composition& c : all_compositions(d, k)) {
      if (c.is_basic()) out.push_back(c);
    }
  }
  return out;
}

Composition parse_composition(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != '(' && c != ')' && c != ' ') s += c;
  }
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw std::invalid_argument("malformed composition '" + text + "'");
    }
    parts.push_back(v);
  }
  if (!s.empty() && s.back() == ',') throw std::invalid_argument("malformed composition '" + text + "'");
  return Composition(std::move(parts));
}

// ---------------------------------------------------------------------------

Character::Character(int d, std::vector<int> letters) : d_(d), letters_(std::move(letters)) {
  if (d < 1) throw std::invalid_argument("character order must be positive");
  check_size(size());
  for (int a : letters_) {
    if (a < 1 || a > d) {
      throw std::invalid_argument("character letter " + std::to_string(a) + " outside 1.." +
                                  std::to_string(d));
    }
  }
}

Composition Character::composition() const {
  std::vector<int> parts(static_cast<std::size_t>(d_), 0);
  for (int a : letters_) ++parts[static_cast<std::size_t>(a - 1)];
  return Composition(std::move(parts));
}

Character Character::extended(int a) const {
  std::vector<int> l = letters_;
  l.push_back(a);
  return Character(d_, std::move(l));
}

std::string Character::to_string() const { return join(letters_); }

Character act(const Perm& w, const Character& chi) {
  if (w.size() != chi.size()) throw std::invalid_argument("act: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(chi.size()));
  for (int j = 1; j <= chi.size(); ++j) out[static_cast<std::size_t>(w(j) - 1)] = chi.letter(j);
  return Character(chi.d(), std::move(out));
}

Character chi_one(const Composition& mu) {
  std::vector<int> letters;
  for (int a = 1; a <= mu.d(); ++a) letters.insert(letters.end(), static_cast<std::size_t>(mu.part(a)), a);
  return Character(mu.d(), std::move(letters));
}

std::vector<Character> orbit(const Composition& mu) {
  Character first = chi_one(mu);
  std::vector<int> letters = first.letters();  // already sorted ascending
  std::vector<Character> out{first};
  while (std::next_permutation(letters.begin(), letters.end())) out.emplace_back(mu.d(), letters);
  return out;
}

Perm min_coset_rep(const Character& chi) {
  int n = chi.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  std::size_t pos = 0;
  for (int a = 1; a <= chi.d(); ++a) {
    for (int j = 1; j <= n; ++j) {
      if (chi.letter(j) == a) img[pos++] = j;
    }
  }
  return Perm(img);
}

std::vector<int> young_members(const Composition& mu) {
  std::vector<bool> excluded(static_cast<std::size_t>(mu.size()) + 1, false);
  int s = 0;
  for (int p : mu.parts()) {
    s += p;
    excluded[static_cast<std::size_t>(s)] = true;
  }
  std::vector<int> out;
  for (int i = 1; i < mu.size(); ++i) {
    if (!excluded[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

bool in_young_subgroup(const Perm& w, const Composition& mu) {
  if (w.size() != mu.size()) return false;
  int start = 1;
  for (int p : mu.parts()) {
    for (int i = start; i < start + p; ++i) {
      if (w(i) < start || w(i) >= start + p) return false;
    }
    start += p;
  }
  return true;
}

}  // namespace yhecke
