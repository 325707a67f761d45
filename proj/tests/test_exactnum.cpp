#include <gtest/gtest.h>

#include <random>

#include "yhecke/exactnum.hpp"

using namespace yhecke;

namespace {

// Brute-force check: does Phi evaluated at a primitive root vanish numerically,
// and is it monic of degree euler_phi(d).
std::complex<double> eval_int_poly(const std::vector<long long>& p, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + static_cast<double>(p[k]);
  return acc;
}

LPoly random_poly(std::mt19937& rng, int d, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms), ex(-max_exp, max_exp), co(-5, 5),
      zp(0, d - 1);
  LPoly p;
  for (int i = nterms(rng); i > 0; --i) {
    Cyclo c = Cyclo(co(rng)) * Cyclo::zeta_power(d, zp(rng)) + Cyclo(co(rng));
    p += LPoly::monomial(c, ex(rng), ex(rng), ex(rng));
  }
  return p;
}

}  // namespace

TEST(Cyclotomic, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (std::vector<long long>{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long long>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, DegreeAndRootsNumerically) {
  for (int d = 1; d <= 30; ++d) {
    auto p = cyclotomic_polynomial(d);
    ASSERT_EQ(static_cast<int>(p.size()) - 1, euler_phi(d)) << d;
    EXPECT_EQ(p.back(), 1);
    for (int k = 1; k <= d; ++k) {
      auto z = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
      bool primitive = std::gcd(k, d) == 1;
      EXPECT_EQ(std::abs(eval_int_poly(p, z)) < 1e-8, primitive) << d << " " << k;
    }
  }
}

TEST(Cyclotomic, PhiOfZetaReducesToZero) {
  for (int d = 1; d <= 12; ++d) {
    Cyclo acc;
    auto p = cyclotomic_polynomial(d);
    for (std::size_t k = 0; k < p.size(); ++k) {
      acc += Cyclo(static_cast<long>(p[k])) * Cyclo::zeta_power(d, static_cast<long long>(k));
    }
    EXPECT_TRUE(acc.is_zero()) << d;
    EXPECT_TRUE(Cyclo::zeta_power(d, d).is_one());
  }
}

TEST(RootPower, Examples) {
  EXPECT_EQ(root_power(2, 2, 1), Cyclo(-1));
  EXPECT_TRUE(root_power(3, 2, 3).is_one());
  EXPECT_EQ(root_power(4, 3, 1), Cyclo(-1));
  EXPECT_THROW(root_power(3, 0, 1), std::invalid_argument);
  EXPECT_THROW(root_power(3, 4, 1), std::invalid_argument);
}

TEST(RootPower, Orthogonality) {
  for (int d = 1; d <= 8; ++d) {
    for (int a = 1; a <= d; ++a) {
      for (int b = 1; b <= d; ++b) {
        Cyclo acc;
        for (int s = 0; s < d; ++s) acc += root_power(d, a, s) * root_power(d, b, -s);
        acc *= Cyclo(Rat(1, d));
        EXPECT_EQ(acc, Cyclo(a == b ? 1 : 0)) << d << " " << a << " " << b;
      }
    }
  }
}

TEST(CycloArith, InverseAndNumericAgreement) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> co(-4, 4);
  for (int d : {3, 4, 5, 7, 8, 9, 12}) {
    for (int rep = 0; rep < 20; ++rep) {
      Cyclo x;
      for (int k = 0; k < d; ++k) x += Cyclo(co(rng)) * Cyclo::zeta_power(d, k);
      if (x.is_zero()) continue;
      EXPECT_TRUE((x * x.inverse()).is_one());
      auto prod = x.to_complex() * x.inverse().to_complex();
      EXPECT_NEAR(prod.real(), 1.0, 1e-9);
      EXPECT_NEAR(prod.imag(), 0.0, 1e-9);
    }
  }
}

TEST(CycloArith, ZetaFourIsI) {
  auto z = Cyclo::zeta_power(4, 1).to_complex();
  EXPECT_NEAR(z.real(), 0.0, 1e-12);
  EXPECT_NEAR(z.imag(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(LPoly(Cyclo::zeta_power(4, 1)).eval(0.3, 0.7, 2.0) - std::complex<double>(0, 1)),
              0.0, 1e-12);
}

TEST(CycloArith, MixedOrdersRejected) {
  EXPECT_THROW(Cyclo::zeta_power(3, 1) + Cyclo::zeta_power(4, 1), std::invalid_argument);
  EXPECT_NO_THROW(Cyclo(2) + Cyclo::zeta_power(4, 1));
}

TEST(LPolyArith, Examples) {
  LPoly u = LPoly::u(), v = LPoly::v();
  EXPECT_EQ((u + v) * (u - v), u.pow(2) - v.pow(2));
  EXPECT_EQ((LPoly::u(2) * LPoly::g()).monomial_inverse(), LPoly::u(-2) * LPoly::g(-1));
  EXPECT_THROW((u + v).monomial_inverse(), std::invalid_argument);
  EXPECT_THROW(LPoly().monomial_inverse(), std::invalid_argument);
  EXPECT_EQ((u.pow(2) - u.pow(4)).eval(1.0, 5.0, 1.0), std::complex<double>(0.0));
  EXPECT_NEAR(strand_factor().eval(2.0, 3.0, 1.0).real(), -1.0, 1e-15);
  EXPECT_THROW(LPoly::v(-1).eval(1.0, 0.0, 1.0), std::domain_error);
}

TEST(LPolyArith, NoZeroCoefficientsStored) {
  LPoly p = LPoly::u() + LPoly::v();
  p -= LPoly::u();
  EXPECT_EQ(p.size(), 1u);
  p -= LPoly::v();
  EXPECT_TRUE(p.is_zero());
}

TEST(LPolyArith, RingAxiomsRandomized) {
  std::mt19937 rng(5);
  for (int d : {1, 3, 4}) {
    for (int rep = 0; rep < 40; ++rep) {
      LPoly a = random_poly(rng, d, 5, 3), b = random_poly(rng, d, 5, 3), c = random_poly(rng, d, 5, 3);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
    }
  }
}

TEST(LPolyArith, EvalIsHomomorphism) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> r(0.5, 1.5);
  for (int d : {1, 2, 5}) {
    for (int rep = 0; rep < 40; ++rep) {
      LPoly a = random_poly(rng, d, 6, 10), b = random_poly(rng, d, 6, 10);
      std::complex<double> u0(r(rng), r(rng)), v0(r(rng), -r(rng)), g0(r(rng), 0.1);
      auto ab = (a * b).eval(u0, v0, g0);
      auto expect = a.eval(u0, v0, g0) * b.eval(u0, v0, g0);
      EXPECT_LE(std::abs(ab - expect), 1e-9 * std::max(1.0, std::abs(expect)));
      auto s = (a + b).eval(u0, v0, g0);
      auto se = a.eval(u0, v0, g0) + b.eval(u0, v0, g0);
      EXPECT_LE(std::abs(s - se), 1e-9 * std::max(1.0, std::abs(se)));
    }
  }
}

TEST(LPolyText, CanonicalFormat) {
  LPoly p = LPoly::monomial(Cyclo(2), 2, 0, 0) - LPoly::u(4) + LPoly::v(2);
  EXPECT_EQ(p.to_string(), "-1 * u^4 + 2 * u^2 + 1 * v^2");
  EXPECT_EQ(LPoly().to_string(), "0");
  EXPECT_EQ(LPoly(1).to_string(), "1");
  EXPECT_EQ(LPoly::monomial(Cyclo(Rat(-1, 2)), 0, -1, 3).to_string(), "-1/2 * v^-1 * g^3");
  LPoly z = LPoly::monomial(Cyclo::zeta_power(3, 1), 1, 0, 0);
  EXPECT_EQ(z.to_string(), "(0 + 1*z) * u^1");
  EXPECT_EQ(LPoly(Cyclo::zeta_power(3, 2)).to_string(), "(-1 + -1*z)");
}

TEST(LPolyText, RoundTrip) {
  std::mt19937 rng(21);
  for (int d : {1, 3, 4, 5}) {
    for (int rep = 0; rep < 30; ++rep) {
      LPoly p = random_poly(rng, d, 6, 4);
      EXPECT_EQ(LPoly::parse(p.to_string(), d), p) << p.to_string();
    }
  }
  EXPECT_THROW(LPoly::parse("2 * x^3", 1), std::invalid_argument);
  EXPECT_THROW(LPoly::parse("(1 + 2*z", 3), std::invalid_argument);
}

TEST(LPolyText, MachineLines) {
  LPoly p = LPoly::monomial(Cyclo(Rat(3, 2)), 1, -1, 0) + LPoly(Cyclo::zeta_power(3, 1));
  auto lines = p.to_machine_lines();
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "1 -1 0 3/2 0");
  EXPECT_EQ(lines[1], "0 0 0 0 1");
}
