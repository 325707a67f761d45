#include <gtest/gtest.h>

#include "test_util.hpp"
#include "yhecke/hecke.hpp"

using namespace yhecke;
using testutil::random_hecke;
using testutil::random_parabolic;
using testutil::random_perm;

namespace {

const LPoly U = LPoly::u(), V = LPoly::v();

// A second reduced word, built from the largest right descent.
std::vector<int> other_reduced_word(Perm w) {
  std::vector<int> rev;
  for (;;) {
    int i = w.size() - 1;
    while (i >= 1 && !w.right_descent(i)) --i;
    if (i < 1) break;
    rev.push_back(i);
    w = w.times_simple(i);
  }
  return {rev.rbegin(), rev.rend()};
}

HeckeElem T(int n, std::vector<int> word) { return t_from_word(n, word); }

}  // namespace

TEST(Hecke, QuadraticAndBraidRelations) {
  HeckeElem t1 = T(2, {1});
  EXPECT_EQ(t1 * t1, HeckeElem::scalar(2, U.pow(2)) + V * t1);
  EXPECT_EQ(T(3, {1}) * T(3, {2}), HeckeElem::basis(Perm::from_word(3, {1, 2})));
  EXPECT_EQ(T(3, {1, 2, 1}), T(3, {2, 1, 2}));
  EXPECT_EQ(T(4, {1, 3}), T(4, {3, 1}));
}

TEST(Hecke, InverseGenerator) {
  EXPECT_EQ(t_inverse_gen(2, 1),
            LPoly::u(-2) * T(2, {1}) - HeckeElem::scalar(2, LPoly::monomial(Cyclo(1), -2, 1, 0)));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(t_inverse_gen(4, i) * T(4, {i}), HeckeElem::scalar(4, 1));
    EXPECT_EQ(T(4, {i}) * t_inverse_gen(4, i), HeckeElem::scalar(4, 1));
  }
  EXPECT_THROW(t_inverse_gen(3, 3), std::invalid_argument);
  EXPECT_THROW(t_from_word(3, {0}), std::invalid_argument);
}

TEST(Hecke, TrefoilExpansion) {
  // T_1^3 = u^2 v + (u^2 + v^2) T_1 by two applications of the quadratic relation.
  HeckeElem expect = HeckeElem::scalar(2, U.pow(2) * V) + (U.pow(2) + V.pow(2)) * T(2, {1});
  EXPECT_EQ(T(2, {1, 1, 1}), expect);
  EXPECT_EQ(t_from_signed_word(2, {1, 1, 1}), expect);
  EXPECT_EQ(t_from_signed_word(2, {1, -1}), HeckeElem::scalar(2, 1));
}

TEST(Hecke, MatsumotoRandom) {
  std::mt19937 rng(1);
  for (int rep = 0; rep < 200; ++rep) {
    int n = std::uniform_int_distribution<int>(1, 6)(rng);
    Perm w = random_perm(rng, n);
    auto w1 = reduced_word(w), w2 = other_reduced_word(w);
    ASSERT_EQ(Perm::from_word(n, w2), w);
    EXPECT_EQ(t_from_word(n, w1), t_from_word(n, w2));
    EXPECT_EQ(t_from_word(n, w1), HeckeElem::basis(w));
  }
}

TEST(Hecke, LeftAndRightGeneratorActionsAgree) {
  std::mt19937 rng(2);
  for (int rep = 0; rep < 50; ++rep) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    HeckeElem x = random_hecke(rng, n);
    int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    EXPECT_EQ(x.gen_times(i), T(n, {i}) * x);
    EXPECT_EQ(x.times_gen(i), x * T(n, {i}));
  }
}

TEST(Hecke, Associativity) {
  std::mt19937 rng(3);
  for (int rep = 0; rep < 60; ++rep) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    HeckeElem x = random_hecke(rng, n), y = random_hecke(rng, n), z = random_hecke(rng, n);
    EXPECT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(MarkovTau, Values) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(markov_tau(HeckeElem::scalar(n, 1)), strand_factor().pow(std::max(0, n - 1))) << n;
  }
  EXPECT_EQ(markov_tau(T(2, {1})), LPoly(1));
  EXPECT_EQ(markov_tau(T(2, {1, 1, 1})), LPoly(2) * U.pow(2) - U.pow(4) + V.pow(2));
  // tau_3(T_1 T_2) = tau_2(T_1) = 1, tau_3(T_1) = D tau_2(T_1) = D.
  EXPECT_EQ(markov_tau(T(3, {1, 2})), LPoly(1));
  EXPECT_EQ(markov_tau(T(3, {1})), strand_factor());
  EXPECT_EQ(markov_tau(HeckeElem::scalar(0, LPoly::u(3))), LPoly::u(3));
}

TEST(MarkovTau, TraceCondition) {
  std::mt19937 rng(4);
  for (int rep = 0; rep < 200; ++rep) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    HeckeElem x = random_hecke(rng, n, 2), y = random_hecke(rng, n, 2);
    EXPECT_EQ(markov_tau(x * y), markov_tau(y * x));
  }
}

TEST(MarkovTau, MarkovCondition) {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    HeckeElem x = random_hecke(rng, n);
    HeckeElem big(n + 1);
    for (const auto& [w, c] : x.terms()) big.add_term(w.extended(n + 1), c);
    LPoly base = markov_tau(x);
    EXPECT_EQ(markov_tau(big.times_gen(n)), base);
    EXPECT_EQ(markov_tau(big * t_inverse_gen(n + 1, n)), base);
    EXPECT_EQ(markov_tau(big), strand_factor() * base);
  }
}

TEST(Parabolic, Examples) {
  Composition mu({2, 2});
  EXPECT_EQ(tau_parabolic(ParabolicElem(mu, HeckeElem::scalar(4, 1))), strand_factor().pow(2));
  EXPECT_EQ(tau_parabolic(ParabolicElem(mu, T(4, {1, 3}))), LPoly(1));
  EXPECT_THROW(ParabolicElem(mu, T(4, {2})), std::invalid_argument);
  Perm w({2, 1, 4, 3});
  EXPECT_EQ(join_blocks(split_blocks(w, mu), mu), w);
}

// tau_n restricted to H^mu equals D^{|[mu]|-1} times the product of block traces.
TEST(Parabolic, ProductFormulaForComp3) {
  std::mt19937 rng(6);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& mu : all_compositions(3, n)) {
      for (int rep = 0; rep < 4; ++rep) {
        ParabolicElem x = random_parabolic(rng, mu);
        EXPECT_EQ(markov_tau(x.elem()),
                  strand_factor().pow(mu.support_size() - 1) * tau_parabolic(x))
            << mu.to_string();
      }
    }
  }
}
