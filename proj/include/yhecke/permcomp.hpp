#ifndef YHECKE_PERMCOMP_HPP
#define YHECKE_PERMCOMP_HPP

// Symmetric groups, compositions and characters of (Z/dZ)^n.
//
// Permutations compose right to left: (v*w)(i) = v(w(i)). All indices
// exposed by the API are 1-based.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace yhecke {

inline constexpr int kMaxStrands = 16;

class Perm {
 public:
  Perm() = default;
  /// One-line notation, images[i-1] = w(i). Throws unless a bijection of 1..n.
  explicit Perm(const std::vector<int>& images);

  static Perm identity(int n);
  /// The simple transposition s_i = (i, i+1) in S_n.
  static Perm simple(int n, int i);
  /// s_{word[0]} s_{word[1]} ... in S_n.
  static Perm from_word(int n, const std::vector<int>& word);

  int size() const { return n_; }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> images() const;
  bool is_identity() const;

  Perm inverse() const;
  /// w * s_i (swap the images at positions i, i+1).
  Perm times_simple(int i) const;
  /// s_i * w (swap the values i, i+1).
  Perm simple_times(int i) const;
  /// l(w s_i) < l(w).
  bool right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  /// l(s_i w) < l(w).
  bool left_descent(int i) const;

  /// The same permutation viewed in S_m, m >= n (fixing n+1..m).
  Perm extended(int m) const;
  /// The restriction to 1..m; requires w to fix every point above m.
  Perm restricted(int m) const;

  std::string to_string() const;

  friend Perm operator*(const Perm& v, const Perm& w);
  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> img_{};
};

/// Number of inversions.
int length(const Perm& w);
/// Reduced word built by repeatedly stripping the smallest left descent, so
/// that Perm::from_word(n, reduced_word(w)) == w.
std::vector<int> reduced_word(const Perm& w);
/// All permutations of S_n in lexicographic order of their one-line notation.
std::vector<Perm> all_perms(int n);
/// Number of cycles, fixed points included.
int cycle_count(const Perm& w);

class Composition {
 public:
  Composition() = default;
  /// Throws on a negative part or an empty part list.
  explicit Composition(std::vector<int> parts);

  int d() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  int part(int a) const { return parts_[static_cast<std::size_t>(a - 1)]; }
  const std::vector<int>& parts() const { return parts_; }

  /// Nonzero parts replaced by 1.
  Composition base() const;
  /// mu^[a]: part a increased by one.
  Composition bump(int a) const;
  /// mu_[a]: part a decreased by one; throws if that part is zero.
  Composition unbump(int a) const;
  /// n! / (mu_1! ... mu_d!).
  long long multiplicity() const;
  /// Every part is 0 or 1 and the size is at least 1.
  bool is_basic() const;
  /// Number of nonzero parts.
  int support_size() const;
  /// First position of block a (1-based), i.e. mu_1 + ... + mu_{a-1} + 1.
  int block_start(int a) const;

  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All compositions of n with d parts, lexicographically descending.
std::vector<Composition> all_compositions(int d, int n);
/// Comp^0_d ordered by size, then lexicographically descending.
std::vector<Composition> basic_compositions(int d);
/// Parses "b1,...,bd" (parentheses optional).
Composition parse_composition(const std::string& text);

class Character {
 public:
  Character() = default;
  /// letters[j-1] = a means chi(t_j) = xi_a; throws unless every a is in 1..d.
  Character(int d, std::vector<int> letters);

  int d() const { return d_; }
  int size() const { return static_cast<int>(letters_.size()); }
  int letter(int j) const { return letters_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& letters() const { return letters_; }

  /// Comp(chi): the number of occurrences of each letter.
  Composition composition() const;
  /// chi extended by one more strand carrying letter a.
  Character extended(int a) const;
  std::string to_string() const;

  friend auto operator<=>(const Character&, const Character&) = default;
  friend bool operator==(const Character&, const Character&) = default;

 private:
  int d_ = 1;
  std::vector<int> letters_;
};

/// w(chi)(t_i) = chi(t_{w^{-1}(i)}).
Character act(const Perm& w, const Character& chi);
/// Letter a on the a-th block of mu.
Character chi_one(const Composition& mu);
/// All characters of composition mu: chi_one(mu) first, the rest ascending.
std::vector<Character> orbit(const Composition& mu);
/// The minimal-length pi with act(pi, chi_one(Comp(chi))) == chi.
Perm min_coset_rep(const Character& chi);
/// I_mu = {1..n-1} minus the partial sums of mu.
std::vector<int> young_members(const Composition& mu);
/// True when w maps each block of mu onto itself.
bool in_young_subgroup(const Perm& w, const Composition& mu);

}  // namespace yhecke

#endif  // YHECKE_PERMCOMP_HPP
