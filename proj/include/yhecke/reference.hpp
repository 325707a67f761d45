#ifndef YHECKE_REFERENCE_HPP
#define YHECKE_REFERENCE_HPP

// Reference generator images for d=2, n=4, each block listed in its own
// orbit order. Matrix rows are separated by ';', entries by spaces:
//   .  zero           u   the scalar u
//   T1, T2            generators of the single non-trivial tensor factor
//   T'1, T''1         T_1 on the first / second factor of H_2 (x) H_2
//   x1, x2            the roots xi_1 = 1, xi_2 = -1
//   1                 the unit

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yhecke/isomap.hpp"

namespace yhecke::reference {

struct Image {
  Composition mu;
  YGen gen;
  std::string name;
  std::string matrix;
};

struct BlockOrder {
  Composition mu;
  std::vector<std::vector<int>> chars;
  // Reference H_k generator index -> our simple reflection in S_4.
  std::vector<int> t_map;
};

inline std::vector<BlockOrder> orders() {
  return {
      {Composition({4, 0}), {{1, 1, 1, 1}}, {0, 1, 2, 3}},
      {Composition({0, 4}), {{2, 2, 2, 2}}, {0, 1, 2, 3}},
      {Composition({3, 1}), {{1, 1, 1, 2}, {1, 1, 2, 1}, {1, 2, 1, 1}, {2, 1, 1, 1}}, {0, 1, 2}},
      {Composition({1, 3}), {{1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 1, 2}, {2, 2, 2, 1}}, {0, 2, 3}},
      {Composition({2, 2}),
       {{1, 1, 2, 2}, {1, 2, 1, 2}, {2, 1, 1, 2}, {1, 2, 2, 1}, {2, 1, 2, 1}, {2, 2, 1, 1}},
       {0, 1}},
  };
}

inline std::vector<Image> images() {
  std::vector<Image> out;
  for (const char* m : {"(4,0)", "(0,4)"}) {
    Composition mu = parse_composition(m);
    const char* x = mu.part(1) == 4 ? "x1" : "x2";
    for (int i = 1; i <= 3; ++i) out.push_back({mu, YGen::g(i), "g" + std::to_string(i), "T" + std::to_string(i)});
    for (int j = 1; j <= 4; ++j) out.push_back({mu, YGen::t(j), "t" + std::to_string(j), x});
    for (int i = 1; i <= 3; ++i) out.push_back({mu, YGen::e(i), "e" + std::to_string(i), "1"});
  }
  Composition a({3, 1}), b({1, 3}), c({2, 2});
  out.insert(out.end(), {
      {a, YGen::g(1), "g1", "T1 . . . ; . T1 . . ; . . . u ; . . u ."},
      {a, YGen::g(2), "g2", "T2 . . . ; . . u . ; . u . . ; . . . T1"},
      {a, YGen::g(3), "g3", ". u . . ; u . . . ; . . T2 . ; . . . T2"},
      {a, YGen::t(1), "t1", "x1 . . . ; . x1 . . ; . . x1 . ; . . . x2"},
      {a, YGen::t(2), "t2", "x1 . . . ; . x1 . . ; . . x2 . ; . . . x1"},
      {a, YGen::t(3), "t3", "x1 . . . ; . x2 . . ; . . x1 . ; . . . x1"},
      {a, YGen::t(4), "t4", "x2 . . . ; . x1 . . ; . . x1 . ; . . . x1"},
      {a, YGen::e(1), "e1", "1 . . . ; . 1 . . ; . . . . ; . . . ."},
      {a, YGen::e(2), "e2", "1 . . . ; . . . . ; . . . . ; . . . 1"},
      {a, YGen::e(3), "e3", ". . . . ; . . . . ; . . 1 . ; . . . 1"},

      {b, YGen::g(1), "g1", ". u . . ; u . . . ; . . T1 . ; . . . T1"},
      {b, YGen::g(2), "g2", "T1 . . . ; . . u . ; . u . . ; . . . T2"},
      {b, YGen::g(3), "g3", "T2 . . . ; . T2 . . ; . . . u ; . . u ."},
      {b, YGen::t(1), "t1", "x1 . . . ; . x2 . . ; . . x2 . ; . . . x2"},
      {b, YGen::t(2), "t2", "x2 . . . ; . x1 . . ; . . x2 . ; . . . x2"},
      {b, YGen::t(3), "t3", "x2 . . . ; . x2 . . ; . . x1 . ; . . . x2"},
      {b, YGen::t(4), "t4", "x2 . . . ; . x2 . . ; . . x2 . ; . . . x1"},
      {b, YGen::e(1), "e1", ". . . . ; . . . . ; . . 1 . ; . . . 1"},
      {b, YGen::e(2), "e2", "1 . . . ; . . . . ; . . . . ; . . . 1"},
      {b, YGen::e(3), "e3", "1 . . . ; . 1 . . ; . . . . ; . . . ."},

      {c, YGen::g(1), "g1",
       "T'1 . . . . . ; . . u . . . ; . u . . . . ; . . . . u . ; . . . u . . ; . . . . . T''1"},
      {c, YGen::g(2), "g2",
       ". u . . . . ; u . . . . . ; . . T'1 . . . ; . . . T''1 . . ; . . . . . u ; . . . . u ."},
      {c, YGen::g(3), "g3",
       "T''1 . . . . . ; . . . u . . ; . . . . u . ; . u . . . . ; . . u . . . ; . . . . . T'1"},
      {c, YGen::t(1), "t1", "x1 . . . . . ; . x1 . . . . ; . . x2 . . . ; . . . x1 . . ; . . . . x2 . ; . . . . . x2"},
      {c, YGen::t(2), "t2", "x1 . . . . . ; . x2 . . . . ; . . x1 . . . ; . . . x2 . . ; . . . . x1 . ; . . . . . x2"},
      {c, YGen::t(3), "t3", "x2 . . . . . ; . x1 . . . . ; . . x1 . . . ; . . . x2 . . ; . . . . x2 . ; . . . . . x1"},
      {c, YGen::t(4), "t4", "x2 . . . . . ; . x2 . . . . ; . . x2 . . . ; . . . x1 . . ; . . . . x1 . ; . . . . . x1"},
      {c, YGen::e(1), "e1", "1 . . . . . ; . . . . . . ; . . . . . . ; . . . . . . ; . . . . . . ; . . . . . 1"},
      {c, YGen::e(2), "e2", ". . . . . . ; . . . . . . ; . . 1 . . . ; . . . 1 . . ; . . . . . . ; . . . . . ."},
      {c, YGen::e(3), "e3", "1 . . . . . ; . . . . . . ; . . . . . . ; . . . . . . ; . . . . . . ; . . . . . 1"},
  });
  return out;
}

inline HeckeElem token_value(const std::string& tok, const BlockOrder& order) {
  const int n = 4;
  if (tok == ".") return HeckeElem(n);
  if (tok == "1" || tok == "x1") return HeckeElem::scalar(n, 1);
  if (tok == "x2") return HeckeElem::scalar(n, -1);
  if (tok == "u") return HeckeElem::scalar(n, LPoly::u());
  if (tok == "T'1") return HeckeElem::basis(Perm::simple(n, 1));
  if (tok == "T''1") return HeckeElem::basis(Perm::simple(n, 3));
  if (tok.size() == 2 && tok[0] == 'T') {
    int i = tok[1] - '0';
    return HeckeElem::basis(Perm::simple(n, order.t_map[static_cast<std::size_t>(i)]));
  }
  throw std::invalid_argument("unknown token " + tok);
}

/// The reference matrix re-indexed into our orbit order.
inline Block expected_block(const Image& img) {
  BlockOrder order;
  for (const auto& o : orders()) {
    if (o.mu == img.mu) order = o;
  }
  const OrbitData& od = orbit_data(img.mu);
  Block b(img.mu);
  std::stringstream rows(img.matrix);
  std::string row;
  std::size_t r = 0;
  while (std::getline(rows, row, ';')) {
    std::stringstream cols(row);
    std::string tok;
    std::size_t c = 0;
    while (cols >> tok) {
      int i = od.index_of(Character(2, order.chars[r]));
      int j = od.index_of(Character(2, order.chars[c]));
      b.add(i, j, token_value(tok, order));
      ++c;
    }
    if (c != order.chars.size()) throw std::logic_error("ragged reference matrix");
    ++r;
  }
  if (r != order.chars.size()) throw std::logic_error("wrong reference row count");
  return b;
}

/// Reference coset representatives as reduced words.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> coset_reps() {
  return {
      {{1, 1, 1, 2}, {}},        {{1, 1, 2, 1}, {3}},          {{1, 2, 1, 1}, {2, 3}},
      {{2, 1, 1, 1}, {1, 2, 3}}, {{1, 2, 2, 2}, {}},           {{2, 1, 2, 2}, {1}},
      {{2, 2, 1, 2}, {2, 1}},    {{2, 2, 2, 1}, {3, 2, 1}},    {{1, 1, 2, 2}, {}},
      {{1, 2, 1, 2}, {2}},       {{2, 1, 1, 2}, {1, 2}},       {{1, 2, 2, 1}, {3, 2}},
      {{2, 1, 2, 1}, {1, 3, 2}}, {{2, 2, 1, 1}, {2, 1, 3, 2}},
  };
}

}  // namespace yhecke::reference

#endif  // YHECKE_REFERENCE_HPP
