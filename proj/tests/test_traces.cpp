#include <gtest/gtest.h>

#include "test_util.hpp"
#include "yhecke/traces.hpp"

using namespace yhecke;
using testutil::random_coeff;
using testutil::random_perm;

namespace {

YElem random_y(std::mt19937& rng, int d, int n, int terms = 3) {
  YElem x(d, n);
  std::uniform_int_distribution<int> kd(0, d - 1);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> k(static_cast<std::size_t>(n));
    for (int& v : k) v = kd(rng);
    x += YElem::term(d, k, random_perm(rng, n), random_coeff(rng, d));
  }
  return x;
}

TraceSpec random_spec(std::mt19937& rng, int d) {
  TraceSpec s(d);
  for (const auto& mu0 : basic_compositions(d)) {
    if (rng() % 3 != 0) s.set(mu0, random_coeff(rng));
  }
  return s;
}

YElem gen(int d, int n, YGen g) { return YElem::generator(d, n, g); }

}  // namespace

TEST(TraceSpec, ValidationAndText) {
  EXPECT_EQ(all_basic_specs(1).size(), 1u);
  EXPECT_EQ(all_basic_specs(2).size(), 3u);
  EXPECT_EQ(all_basic_specs(3).size(), 7u);
  EXPECT_EQ(all_basic_specs(4).size(), 15u);
  TraceSpec s(2);
  EXPECT_THROW(s.set(Composition({2, 0}), LPoly(1)), std::invalid_argument);
  EXPECT_THROW(s.set(Composition({0, 0}), LPoly(1)), std::invalid_argument);
  EXPECT_THROW(s.set(Composition({1, 0, 0}), LPoly(1)), std::invalid_argument);
  s.set(Composition({1, 1}), LPoly::u(2) - Cyclo(Rat(1, 3)) * LPoly::v(-1));
  s.set(Composition({0, 1}), LPoly(5));
  EXPECT_EQ(TraceSpec::parse(s.to_text(), 2), s);
  EXPECT_EQ(basic_spec(Composition({1, 0})).to_text(), "mu0 = (1,0) ; alpha = 1\n");
  EXPECT_EQ(TraceSpec::parse("# comment\n\nmu0 = (1,0) ; alpha = 1\n", 2), basic_spec(Composition({1, 0})));
  EXPECT_THROW(TraceSpec::parse("mu0 = (1,0) alpha = 1", 2), std::invalid_argument);
  EXPECT_THROW(TraceSpec::parse("mu = (1,0) ; alpha = 1", 2), std::invalid_argument);
  EXPECT_THROW(TraceSpec::parse("mu0 = (1,0) ; alpha = 1\nmu0 = (1,0) ; alpha = 2", 2), std::invalid_argument);
}

TEST(Rho, Examples) {
  // All alphas zero.
  EXPECT_TRUE(rho(TraceSpec(2), gen(2, 3, YGen::g(1))).is_zero());
  // Only mu=(1,1) contributes to rho_{(1,1)}(1) at n=2, with trace 2.
  EXPECT_EQ(rho(basic_spec(Composition({1, 1})), YElem::one(2, 2)), LPoly(2));
  EXPECT_EQ(rho(basic_spec(Composition({1})), YElem::one(1, 1)), LPoly(1));
  // d=1: rho equals tau on H_n.
  std::mt19937 rng(41);
  for (int rep = 0; rep < 20; ++rep) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    HeckeElem h = testutil::random_hecke(rng, n);
    YElem y(1, n);
    for (const auto& [w, c] : h.terms()) {
      y += YElem::term(1, std::vector<int>(static_cast<std::size_t>(n), 0), w, c * LPoly::u(length(w)));
    }
    EXPECT_EQ(rho(basic_spec(Composition({1})), y), markov_tau(h));
  }
  // rho_{(1,0)} kills every block whose base is not (1,0).
  for (const auto& mu : all_compositions(2, 3)) {
    LPoly r = rho(basic_spec(Composition({1, 0})), idempotent_Emu(mu));
    if (mu.base() == Composition({1, 0})) {
      EXPECT_EQ(r, strand_factor().pow(2));
    } else {
      EXPECT_TRUE(r.is_zero()) << mu.to_string();
    }
  }
  EXPECT_THROW(rho(TraceSpec(3), YElem::one(2, 2)), std::invalid_argument);
}

TEST(Rho, TraceCondition) {
  std::mt19937 rng(42);
  for (int rep = 0; rep < 40; ++rep) {
    int d = std::uniform_int_distribution<int>(1, 3)(rng);
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    TraceSpec s = random_spec(rng, d);
    YElem x = random_y(rng, d, n), y = random_y(rng, d, n);
    EXPECT_EQ(rho(s, x * y), rho(s, y * x));
  }
}

TEST(Rho, MarkovCondition) {
  std::mt19937 rng(43);
  for (int rep = 0; rep < 40; ++rep) {
    int d = std::uniform_int_distribution<int>(1, 3)(rng);
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    TraceSpec s = random_spec(rng, d);
    YElem x = random_y(rng, d, n);
    YElem up = x.embedded(n + 1);
    LPoly base = rho(s, x);
    EXPECT_EQ(rho(s, up * gen(d, n + 1, YGen::g(n))), base);
    EXPECT_EQ(rho(s, up * gen(d, n + 1, YGen::g_inv(n))), base);
  }
}

TEST(Rho, BlockLevelMarkovIdentity) {
  std::mt19937 rng(44);
  for (int rep = 0; rep < 60; ++rep) {
    int d = std::uniform_int_distribution<int>(1, 3)(rng);
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    auto comps = all_compositions(d, n);
    Composition mu = comps[std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng)];
    TraceSpec s = random_spec(rng, d);
    ParabolicElem x = testutil::random_parabolic(rng, mu);
    for (int a = 1; a <= d; ++a) {
      if (mu.part(a) == 0) continue;
      Composition up = mu.bump(a);
      HeckeElem lifted = embed_parabolic(x.elem(), mu, a);
      // T_{mu_a} of block a is the global generator at position mu_1 + ... + mu_a.
      int p = mu.block_start(a) + mu.part(a) - 1;
      LPoly expect = associated_trace(s, x);
      EXPECT_EQ(associated_trace(s, ParabolicElem(up, lifted.times_gen(p))), expect);
      EXPECT_EQ(associated_trace(s, ParabolicElem(up, lifted * t_inverse_gen(n + 1, p))), expect);
    }
  }
}

TEST(Rho, LinearInTheSpec) {
  std::mt19937 rng(45);
  for (int rep = 0; rep < 20; ++rep) {
    int d = std::uniform_int_distribution<int>(1, 3)(rng);
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    YElem x = random_y(rng, d, n);
    TraceSpec s(d);
    LPoly combined;
    for (const auto& mu0 : basic_compositions(d)) {
      LPoly c = random_coeff(rng);
      s += c * basic_spec(mu0);
      combined += c * rho(basic_spec(mu0), x);
    }
    EXPECT_EQ(rho(s, x), combined);
  }
}

TEST(Rho, AssociatedTraceIsRestrictedTau) {
  std::mt19937 rng(46);
  for (int rep = 0; rep < 60; ++rep) {
    int d = std::uniform_int_distribution<int>(1, 3)(rng);
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    auto comps = all_compositions(d, n);
    Composition mu = comps[std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng)];
    TraceSpec s = random_spec(rng, d);
    ParabolicElem x = testutil::random_parabolic(rng, mu);
    // rho^mu * D^{|[mu]|-1} = alpha_{[mu]} tau_n, D = v^{-1}(1-u^2).
    EXPECT_EQ(associated_trace(s, x) * strand_factor().pow(mu.support_size() - 1),
              s.alpha(mu.base()) * markov_tau(x.elem()));
  }
}

TEST(SymmetrizingForms, AgreeOnTheBasis) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& chi : all_characters(d, n)) {
        for (const auto& w : all_perms(n)) {
          YElem x = from_E_basis(d, n, EBasis{{{chi, w}, LPoly(1)}});
          LPoly expect = w.is_identity() ? LPoly(1) : LPoly();
          EXPECT_EQ(symmetrizing_tilde(x), expect);
          EXPECT_EQ(symmetrizing_rho(x), expect);
        }
      }
    }
  }
}

TEST(SymmetrizingForms, Examples) {
  EXPECT_EQ(symmetrizing_tilde(YElem::one(3, 2)), LPoly(9));
  EXPECT_EQ(symmetrizing_rho(YElem::one(3, 2)), LPoly(9));
  // A nontrivial framing exponent alone gives zero.
  EXPECT_TRUE(symmetrizing_tilde(gen(2, 2, YGen::t(1))).is_zero());
  EXPECT_TRUE(symmetrizing_rho(gen(2, 2, YGen::t(1))).is_zero());
  // g_1 = u gt_1 is off the identity.
  EXPECT_TRUE(symmetrizing_rho(gen(2, 2, YGen::g(1))).is_zero());
}

TEST(ESystem, Values) {
  EXPECT_EQ(esystem_c(2, {1, 2}, 0), Cyclo(1));
  EXPECT_EQ(esystem_c(2, {1, 2}, 1), Cyclo(0));
  EXPECT_EQ(esystem_c(3, {2}, 1), Cyclo::zeta_power(3, 1));
  EXPECT_EQ(esystem_c(4, {1, 2}, 2), Cyclo(0));
  EXPECT_EQ(esystem_c(4, {2, 4}, 2), Cyclo(-1));
  for (int d = 1; d <= 4; ++d) {
    for (int a = 1; a <= d; ++a) EXPECT_EQ(esystem_c(d, {a}, 0), Cyclo(1));
  }
  EXPECT_THROW(esystem_c(2, {}, 0), std::invalid_argument);
  EXPECT_THROW(esystem_c(2, {3}, 0), std::invalid_argument);
  EXPECT_THROW(esystem_c(2, {1, 1}, 0), std::invalid_argument);

  TraceSpec s = jl_spec(2, {1});
  EXPECT_EQ(s.alpha(Composition({1, 0})), LPoly(1));
  EXPECT_TRUE(s.alpha(Composition({0, 1})).is_zero());
  EXPECT_TRUE(s.alpha(Composition({1, 1})).is_zero());
  TraceSpec full = jl_spec(2, {1, 2});
  EXPECT_EQ(full.alpha(Composition({1, 1})), Cyclo(Rat(1, 2)) * strand_factor());
}

TEST(ESystem, LevelOneValuesAreC) {
  for (int d = 1; d <= 4; ++d) {
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      std::vector<int> S;
      for (int a = 1; a <= d; ++a) {
        if (mask & (1u << (a - 1))) S.push_back(a);
      }
      TraceSpec s = jl_spec(d, S);
      YElem t = gen(d, 1, YGen::t(1)), p = YElem::one(d, 1);
      for (int b = 0; b < d; ++b, p = p * t) EXPECT_EQ(rho(s, p), LPoly(esystem_c(d, S, b)));
    }
  }
}

TEST(ESystem, NumericPoint) {
  ESystem e(2, {1, 2});
  std::complex<double> q(1.3, 0.2), z(0.7, -0.4);
  auto p = e.point(q, z);
  std::complex<double> lambda = (z + (1.0 - q) * 0.5) / (q * z);
  EXPECT_LT(std::abs(p.u * p.u - q * lambda), 1e-12);
  EXPECT_LT(std::abs(p.v * p.v - (q - 1.0) * (q - 1.0) * lambda), 1e-12);
  EXPECT_LT(std::abs(p.gamma * p.gamma * q - 1.0), 1e-12);
  // v^{-1}(1-u^2) = E_S / (z sqrt(lambda)) where E_S = 1/|S|.
  EXPECT_LT(std::abs((1.0 - p.u * p.u) / p.v - 0.5 / (z * std::sqrt(lambda))), 1e-12);
  EXPECT_THROW(e.point(0.0, z), std::domain_error);
  EXPECT_THROW(e.point(q, 0.0), std::domain_error);
  // z = (q-1)/2 makes lambda vanish.
  EXPECT_THROW(e.point(q, (q - 1.0) * 0.5), std::domain_error);
}

TEST(Semisimple, Criterion) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(semisimple_at(n, std::complex<double>(1.0, 0.0)));
    EXPECT_TRUE(semisimple_at(n, Cyclo(1)));
    EXPECT_TRUE(semisimple_at(n, LPoly::u()));
  }
  EXPECT_TRUE(semisimple_at(1, std::complex<double>(0.0, 1.0)));
  EXPECT_FALSE(semisimple_at(2, std::complex<double>(0.0, 1.0)));
  EXPECT_FALSE(semisimple_at(2, Cyclo::zeta_power(4, 1)));
  EXPECT_TRUE(semisimple_at(2, Cyclo::zeta_power(3, 1)));
  // zeta_6^2 = zeta_3 is a primitive cube root, so 1 + q^2 + q^4 = 0.
  EXPECT_FALSE(semisimple_at(3, Cyclo::zeta_power(6, 1)));
  EXPECT_TRUE(semisimple_at(2, Cyclo(-1)));
  EXPECT_THROW(semisimple_at(2, Cyclo(0)), std::invalid_argument);
}
