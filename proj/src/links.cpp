#include "yhecke/links.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace yhecke {

namespace {

int parse_int(std::string_view s, const std::string& token) {
  int v = 0;
  auto first = s.data(), last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed braid token `" + token + "`");
  }
  return v;
}

void require_unframed(const FramedBraidWord& w, const char* what) {
  if (!w.is_unframed()) throw std::invalid_argument(std::string(what) + " takes an unframed braid word");
}

}  // namespace

FramedBraidWord::FramedBraidWord(int n, int d, std::vector<BraidToken> tokens)
    : n_(n), d_(d), tokens_(std::move(tokens)) {
  if (n < 1 || n > kMaxStrands) {
    throw std::invalid_argument("strand count must be in 1.." + std::to_string(kMaxStrands));
  }
  if (d < 1) throw std::invalid_argument("framing modulus d must be >= 1");
  for (auto& t : tokens_) {
    if (t.kind == BraidToken::Kind::Sigma) {
      if (t.index < 1 || t.index >= n) {
        throw std::invalid_argument("sigma_" + std::to_string(t.index) + " is out of range for " +
                                    std::to_string(n) + " strands");
      }
      if (t.exp != 1 && t.exp != -1) throw std::invalid_argument("sigma exponent must be +1 or -1");
    } else {
      if (t.index < 1 || t.index > n) {
        throw std::invalid_argument("t_" + std::to_string(t.index) + " is out of range for " + std::to_string(n) +
                                    " strands");
      }
      t.exp = ((t.exp % d) + d) % d;
    }
  }
}

FramedBraidWord FramedBraidWord::parse(std::string_view text, int n, int d) {
  std::istringstream in{std::string(text)};
  std::vector<BraidToken> tokens;
  std::string tok;
  while (in >> tok) {
    if (tok.front() == 't') {
      auto caret = tok.find('^');
      if (caret == std::string::npos) throw std::invalid_argument("malformed braid token `" + tok + "`");
      std::string_view sv(tok);
      int j = parse_int(sv.substr(1, caret - 1), tok);
      if (sv[1] == '-' || sv[1] == '+') throw std::invalid_argument("malformed braid token `" + tok + "`");
      int k = parse_int(sv.substr(caret + 1), tok);
      tokens.push_back({BraidToken::Kind::Framing, j, k});
    } else {
      int k = parse_int(tok, tok);
      if (k == 0) throw std::invalid_argument("braid token 0 is not a generator");
      tokens.push_back({BraidToken::Kind::Sigma, k > 0 ? k : -k, k > 0 ? 1 : -1});
    }
  }
  return FramedBraidWord(n, d, std::move(tokens));
}

bool FramedBraidWord::is_unframed() const {
  for (const auto& t : tokens_) {
    if (t.kind == BraidToken::Kind::Framing) return false;
  }
  return true;
}

FramedBraidWord FramedBraidWord::inverse() const {
  std::vector<BraidToken> r(tokens_.rbegin(), tokens_.rend());
  for (auto& t : r) t.exp = -t.exp;
  return FramedBraidWord(n_, d_, std::move(r));
}

FramedBraidWord FramedBraidWord::rotated(std::size_t k) const {
  if (tokens_.empty()) return *this;
  k %= tokens_.size();
  std::vector<BraidToken> r(tokens_.begin() + static_cast<std::ptrdiff_t>(k), tokens_.end());
  r.insert(r.end(), tokens_.begin(), tokens_.begin() + static_cast<std::ptrdiff_t>(k));
  return FramedBraidWord(n_, d_, std::move(r));
}

FramedBraidWord FramedBraidWord::stabilized(int sign) const {
  std::vector<BraidToken> r = tokens_;
  r.push_back({BraidToken::Kind::Sigma, n_, sign < 0 ? -1 : 1});
  return FramedBraidWord(n_ + 1, d_, std::move(r));
}

FramedBraidWord FramedBraidWord::operator*(const FramedBraidWord& o) const {
  if (o.n_ != n_ || o.d_ != d_) throw std::invalid_argument("braid words on different strand counts");
  std::vector<BraidToken> r = tokens_;
  r.insert(r.end(), o.tokens_.begin(), o.tokens_.end());
  return FramedBraidWord(n_, d_, std::move(r));
}

std::string FramedBraidWord::to_string() const {
  std::string out;
  for (const auto& t : tokens_) {
    if (!out.empty()) out += ' ';
    if (t.kind == BraidToken::Kind::Sigma) {
      out += std::to_string(t.exp * t.index);
    } else {
      out += "t" + std::to_string(t.index) + "^" + std::to_string(t.exp);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Perm underlying_perm(const FramedBraidWord& w) {
  Perm p = Perm::identity(w.n());
  for (const auto& t : w.tokens()) {
    if (t.kind == BraidToken::Kind::Sigma) p = p.times_simple(t.index);
  }
  return p;
}

int component_count(const FramedBraidWord& w) { return cycle_count(underlying_perm(w)); }

HeckeElem delta_H(const FramedBraidWord& w) {
  require_unframed(w, "delta_H");
  std::vector<int> word;
  for (const auto& t : w.tokens()) word.push_back(t.exp * t.index);
  return t_from_signed_word(w.n(), word);
}

YElem delta_gamma(const FramedBraidWord& w) {
  const int d = w.d(), n = w.n();
  YElem x = YElem::one(d, n);
  for (const auto& t : w.tokens()) {
    if (t.kind == BraidToken::Kind::Framing) {
      for (int s = 0; s < t.exp; ++s) x = y_mul_gen(x, YGen::t(t.index), Side::Right);
      continue;
    }
    const LPoly g = LPoly::g(t.exp);
    YElem xe = y_mul_gen(x, YGen::e(t.index), Side::Right);
    YElem mixed = g * x + (LPoly(1) - g) * xe;
    x = y_mul_gen(mixed, t.exp > 0 ? YGen::g(t.index) : YGen::g_inv(t.index), Side::Right);
  }
  return x;
}

Block delta_gamma_block(const FramedBraidWord& w, const Composition& mu) {
  if (mu.d() != w.d() || mu.size() != w.n()) {
    throw std::invalid_argument("composition " + mu.to_string() + " does not match the braid word");
  }
  const OrbitData& od = orbit_data(mu);
  const int n = w.n(), d = w.d();
  Block acc = Block::identity(mu);
  for (const auto& t : w.tokens()) {
    Block step(mu);
    if (t.kind == BraidToken::Kind::Framing) {
      if (t.exp == 0) continue;
      for (int k = 1; k <= od.size(); ++k) {
        int a = od.chars[static_cast<std::size_t>(k - 1)].letter(t.index);
        step.add_unchecked(k, k, HeckeElem::scalar(n, LPoly(root_power(d, a, t.exp))));
      }
    } else {
      step = psi_generator_block(mu, t.exp > 0 ? YGen::g(t.index) : YGen::g_inv(t.index));
      // gamma^{+-1} + (1 - gamma^{+-1}) e_i is diagonal: 1 where chi_k(t_i) = chi_k(t_{i+1}).
      for (int k = 1; k <= od.size(); ++k) {
        const Character& chi = od.chars[static_cast<std::size_t>(k - 1)];
        if (chi.letter(t.index) != chi.letter(t.index + 1)) step.scale_row(k, LPoly::g(t.exp));
      }
    }
    acc = acc * step;
  }
  return acc;
}

LPoly block_contribution(const FramedBraidWord& w, const TraceSpec& spec, const Composition& mu) {
  if (spec.d() != w.d()) throw std::invalid_argument("trace spec and braid word disagree on d");
  if (spec.alpha(mu.base()).is_zero()) return LPoly();
  return block_contribution(spec, delta_gamma_block(w, mu));
}

LPoly invariant_gamma(const FramedBraidWord& w, const TraceSpec& spec) {
  if (spec.d() != w.d()) {
    throw std::invalid_argument("trace spec has d=" + std::to_string(spec.d()) + " but the word has d=" +
                                std::to_string(w.d()));
  }
  LPoly acc;
  for (const auto& mu : all_compositions(w.d(), w.n())) acc += block_contribution(w, spec, mu);
  return acc;
}

LPoly homflypt(const FramedBraidWord& w) {
  require_unframed(w, "homflypt");
  return markov_tau(delta_H(w));
}

LPoly jl_invariant(const FramedBraidWord& w, const std::vector<int>& S) {
  return invariant_gamma(w, jl_spec(w.d(), S));
}

std::complex<double> jl_numeric(const FramedBraidWord& w, const std::vector<int>& S, std::complex<double> q,
                                std::complex<double> z, bool flip_branch) {
  ESystem es(w.d(), S);
  ESystem::Point p = es.point(q, z, flip_branch);
  return invariant_gamma(w, es.spec()).eval(p.u, p.v, p.gamma);
}

}  // namespace yhecke
