#include "yhecke/verify.hpp"

#include <algorithm>
#include <complex>
#include <random>
#include <stdexcept>

#include "yhecke/links.hpp"
#include "yhecke/reference.hpp"

namespace yhecke {

namespace {

class Check {
 public:
  explicit Check(std::string id) { r_.id = std::move(id); }
  void expect(bool cond, const std::string& what) {
    if (cond || !r_.ok) return;
    r_.ok = false;
    r_.counterexample = what;
  }
  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

LPoly small_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> co(-3, 3), ex(-2, 2);
  LPoly p = LPoly::monomial(Cyclo(co(rng)), ex(rng), ex(rng), 0);
  return p.is_zero() ? LPoly(1) : p;
}

Perm random_perm(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

Character random_character(std::mt19937& rng, int d, int n) {
  std::vector<int> l(static_cast<std::size_t>(n));
  for (int& a : l) a = std::uniform_int_distribution<int>(1, d)(rng);
  return Character(d, l);
}

YElem random_y(std::mt19937& rng, int d, int n, int terms = 3) {
  YElem x(d, n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> k(static_cast<std::size_t>(n));
    for (int& v : k) v = std::uniform_int_distribution<int>(0, d - 1)(rng);
    x += YElem::term(d, k, random_perm(rng, n), small_coeff(rng));
  }
  return x;
}

YElem e_basis(const Character& chi, const Perm& w) {
  return from_E_basis(chi.d(), chi.size(), EBasis{{{chi, w}, LPoly(1)}});
}

std::string describe(const Character& chi, const Perm& w) { return "E_" + chi.to_string() + " gt_" + w.to_string(); }

std::vector<std::vector<int>> nonempty_subsets(int d) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> S;
    for (int a = 1; a <= d; ++a) {
      if (mask & (1u << (a - 1))) S.push_back(a);
    }
    out.push_back(S);
  }
  return out;
}

std::string subset_name(const std::vector<int>& S) {
  std::string s = "{";
  for (std::size_t i = 0; i < S.size(); ++i) s += (i ? "," : "") + std::to_string(S[i]);
  return s + "}";
}

std::vector<CheckResult> suite_iso(int d, int n, std::mt19937& rng) {
  std::vector<CheckResult> out;
  Check full("iso.phi-psi");
  for (const auto& chi : all_characters(d, n)) {
    for (const auto& w : all_perms(n)) {
      YElem x = e_basis(chi, w);
      full.expect(phi(psi(x)) == x, describe(chi, w));
    }
  }
  out.push_back(full.result());

  Check hom("iso.homomorphism");
  for (int rep = 0; rep < 200; ++rep) {
    Character c1 = random_character(rng, d, n), c2 = random_character(rng, d, n);
    Perm w1 = random_perm(rng, n), w2 = random_perm(rng, n);
    YElem x = e_basis(c1, w1), y = e_basis(c2, w2);
    hom.expect(psi(x * y) == psi(x) * psi(y), describe(c1, w1) + " * " + describe(c2, w2));
  }
  out.push_back(hom.result());

  if (n >= 2) {
    Check emb("iso.embedding");
    for (int rep = 0; rep < 50; ++rep) {
      YElem x = random_y(rng, d, n - 1);
      emb.expect(psi(x.embedded(n)) == iota(psi(x)), x.to_string());
    }
    out.push_back(emb.result());
  }

  if (d == 2 && n == 4) {
    Check ex("iso.reference-images");
    for (const auto& img : reference::images()) {
      ex.expect(psi(YElem::generator(2, 4, img.gen)).block(img.mu) == reference::expected_block(img),
                img.mu.to_string() + " " + img.name);
    }
    for (const auto& [letters, word] : reference::coset_reps()) {
      ex.expect(min_coset_rep(Character(2, letters)) == Perm::from_word(4, word),
                "coset representative of " + Character(2, letters).to_string());
    }
    out.push_back(ex.result());
  }
  return out;
}

std::vector<CheckResult> suite_markov(int d, int n, std::mt19937& rng) {
  std::vector<CheckResult> out;
  for (const auto& mu0 : basic_compositions(d)) {
    TraceSpec s = basic_spec(mu0);
    Check tr("markov.trace" + mu0.to_string());
    for (int rep = 0; rep < 20; ++rep) {
      YElem x = random_y(rng, d, n), y = random_y(rng, d, n);
      tr.expect(rho(s, x * y) == rho(s, y * x), "x = " + x.to_string() + ", y = " + y.to_string());
    }
    out.push_back(tr.result());
    Check st("markov.stabilization" + mu0.to_string());
    for (int rep = 0; rep < 20; ++rep) {
      YElem x = random_y(rng, d, n - 1);
      YElem up = x.embedded(n);
      LPoly base = rho(s, x);
      st.expect(rho(s, up * YElem::generator(d, n, YGen::g(n - 1))) == base &&
                    rho(s, up * YElem::generator(d, n, YGen::g_inv(n - 1))) == base,
                "x = " + x.to_string());
    }
    out.push_back(st.result());
  }
  return out;
}

std::vector<CheckResult> suite_schur(int d, int n) {
  Check c("schur.symmetrizing-forms");
  for (const auto& chi : all_characters(d, n)) {
    for (const auto& w : all_perms(n)) {
      YElem x = e_basis(chi, w);
      LPoly a = symmetrizing_rho(x), b = symmetrizing_tilde(x);
      c.expect(a == b, describe(chi, w) + ": " + a.to_string() + " vs " + b.to_string());
    }
  }
  return {c.result()};
}

std::vector<CheckResult> suite_jl(int d, int n, std::mt19937& rng) {
  std::vector<CheckResult> out;
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  auto random_c = [&] {
    for (;;) {
      std::complex<double> c(re(rng), re(rng));
      if (std::abs(c) > 0.2) return c;
    }
  };
  for (const auto& S : nonempty_subsets(d)) {
    const std::string name = subset_name(S);
    TraceSpec s = jl_spec(d, S);
    Check lv("jl.level-one" + name);
    YElem t = YElem::generator(d, 1, YGen::t(1)), p = YElem::one(d, 1);
    for (int b = 0; b < d; ++b, p = p * t) {
      lv.expect(rho(s, p) == LPoly(esystem_c(d, S, b)), "b = " + std::to_string(b));
    }
    out.push_back(lv.result());

    Check un("jl.unknot" + name);
    FramedBraidWord unknot = FramedBraidWord::parse("1", 2, d);
    for (int rep = 0; rep < 20; ++rep) {
      std::complex<double> q = random_c(), z = random_c();
      std::complex<double> val;
      try {
        val = jl_numeric(unknot, S, q, z);
      } catch (const std::domain_error&) {
        continue;
      }
      un.expect(std::abs(val - 1.0) < 1e-9, "q = " + std::to_string(q.real()) + "+" + std::to_string(q.imag()) +
                                                "i, z = " + std::to_string(z.real()) + "+" +
                                                std::to_string(z.imag()) + "i");
    }
    out.push_back(un.result());

    Check st("jl.stabilization" + name);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<BraidToken> tokens;
      int m = n - 1;
      for (int i = 0; i < 5; ++i) {
        if (m == 1 || rng() % 3 == 0) {
          tokens.push_back({BraidToken::Kind::Framing, std::uniform_int_distribution<int>(1, m)(rng),
                            std::uniform_int_distribution<int>(0, d - 1)(rng)});
        } else {
          tokens.push_back(
              {BraidToken::Kind::Sigma, std::uniform_int_distribution<int>(1, m - 1)(rng), rng() % 2 ? 1 : -1});
        }
      }
      FramedBraidWord w(m, d, tokens);
      LPoly base = invariant_gamma(w, s);
      st.expect(invariant_gamma(w.stabilized(1), s) == base && invariant_gamma(w.stabilized(-1), s) == base,
                "word `" + w.to_string() + "` on " + std::to_string(m) + " strands");
    }
    out.push_back(st.result());
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"iso", "markov", "schur", "jl"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int d, int n, unsigned seed,
                                   const VerifyLimits& limits) {
  bool known = false;
  for (const auto& s : suite_names()) known = known || s == suite;
  if (!known) throw std::invalid_argument("unknown suite `" + suite + "` (expected iso, markov, schur or jl)");
  if (d < 1 || d > limits.max_d) {
    throw std::invalid_argument("--d must be in 1.." + std::to_string(limits.max_d));
  }
  const int min_n = (suite == "markov" || suite == "jl") ? 2 : 1;
  if (n < min_n || n > limits.max_n) {
    throw std::invalid_argument("--n must be in " + std::to_string(min_n) + ".." + std::to_string(limits.max_n) +
                                " for suite " + suite);
  }
  long long size = 1;
  for (int i = 1; i <= n; ++i) size *= static_cast<long long>(d) * i;
  if (size > limits.max_basis) {
    throw std::invalid_argument("d^n * n! = " + std::to_string(size) + " exceeds the limit " +
                                std::to_string(limits.max_basis));
  }
  std::mt19937 rng(seed);
  if (suite == "iso") return suite_iso(d, n, rng);
  if (suite == "markov") return suite_markov(d, n, rng);
  if (suite == "schur") return suite_schur(d, n);
  return suite_jl(d, n, rng);
}

}  // namespace yhecke
