#ifndef YHECKE_ISOMAP_HPP
#define YHECKE_ISOMAP_HPP

// The isomorphism between Y_{d,n} and the direct sum over compositions mu of
// m_mu x m_mu matrices over the parabolic Hecke algebra H^mu, and the
// embedding of level n into level n+1 on the matrix side.
//
// Matrices are sparse: only nonzero entries are stored.

#include <map>
#include <utility>
#include <vector>

#include "yhecke/hecke.hpp"
#include "yhecke/yokonuma.hpp"

namespace yhecke {

/// Orbit of a composition with the coset representatives pi_k, cached per mu.
struct OrbitData {
  Composition mu;
  std::vector<Character> chars;  // chars[k-1] = chi_k
  std::map<Character, int> index;  // chi_k -> k
  std::vector<Perm> pi;
  std::vector<Perm> pi_inv;

  int size() const { return static_cast<int>(chars.size()); }
  int index_of(const Character& chi) const { return index.at(chi); }
};

/// Thread-safe, never invalidated.
const OrbitData& orbit_data(const Composition& mu);

/// One m_mu x m_mu matrix over H^mu (1-based indices).
class Block {
 public:
  using Entries = std::map<std::pair<int, int>, HeckeElem>;

  explicit Block(const Composition& mu);

  const Composition& mu() const { return mu_; }
  long long dim() const { return dim_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  HeckeElem entry(int i, int j) const;

  /// Adds x at (i, j); throws if the indices are out of range or x leaves H^mu.
  void add(int i, int j, const HeckeElem& x);
  /// Adds without the support check; x must already lie in H^mu.
  void add_unchecked(int i, int j, const HeckeElem& x);
  /// Multiplies row i on the left by the scalar c.
  void scale_row(int i, const LPoly& c);
  /// Matrix trace.
  ParabolicElem trace() const;

  static Block identity(const Composition& mu);

  Block& operator+=(const Block& o);
  friend Block operator+(Block a, const Block& b) { return a += b; }
  friend Block operator*(const Block& a, const Block& b);
  friend Block operator*(const LPoly& c, const Block& a);
  friend bool operator==(const Block&, const Block&) = default;

 private:
  Composition mu_;
  long long dim_;
  Entries entries_;
};

class BlockMatrix {
 public:
  BlockMatrix(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::map<Composition, Block>& blocks() const { return blocks_; }
  /// The block for mu, or an empty block when absent.
  Block block(const Composition& mu) const;

  void add_entry(const Composition& mu, int i, int j, const HeckeElem& x);
  void add_block(const Block& b);

  /// Identity matrix in every block.
  static BlockMatrix identity(int d, int n);

  BlockMatrix& operator+=(const BlockMatrix& o);
  friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  void check_mu(const Composition& mu) const;
  int d_;
  int n_;
  std::map<Composition, Block> blocks_;
};

BlockMatrix psi(const YElem& x);
YElem phi(const BlockMatrix& m);
/// Level n to level n+1.
BlockMatrix iota(const BlockMatrix& m);

/// The image in H^{mu^[a]} of x in H^mu (conjugation moving the new strand to
/// the end of block a).
HeckeElem embed_parabolic(const HeckeElem& x, const Composition& mu, int a);

/// Psi_mu of a single generator, computed row by row without the E-basis.
Block psi_generator_block(const Composition& mu, YGen gen);
BlockMatrix psi_generator(int d, int n, YGen gen);

}  // namespace yhecke

#endif  // YHECKE_ISOMAP_HPP
