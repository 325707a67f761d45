#include "yhecke/traces.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace yhecke {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// "key = value" -> value, checking the key.
std::string field(std::string_view part, std::string_view key) {
  std::string t = trim(part);
  auto eq = t.find('=');
  if (eq == std::string::npos || trim(std::string_view(t).substr(0, eq)) != key) {
    throw std::invalid_argument("expected `" + std::string(key) + " = ...` in trace line, got `" + t + "`");
  }
  return trim(std::string_view(t).substr(eq + 1));
}

}  // namespace

TraceSpec::TraceSpec(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("trace spec needs d >= 1");
}

LPoly TraceSpec::alpha(const Composition& mu0) const {
  auto it = alphas_.find(mu0);
  return it == alphas_.end() ? LPoly() : it->second;
}

void TraceSpec::set(const Composition& mu0, const LPoly& alpha) {
  if (mu0.d() != d_ || !mu0.is_basic()) {
    throw std::invalid_argument("trace parameter index " + mu0.to_string() + " is not in Comp0_" +
                                std::to_string(d_));
  }
  if (alpha.is_zero()) {
    alphas_.erase(mu0);
  } else {
    alphas_[mu0] = alpha;
  }
}

std::string TraceSpec::to_text() const {
  std::string out;
  for (const auto& [mu0, a] : alphas_) out += "mu0 = " + mu0.to_string() + " ; alpha = " + a.to_string() + "\n";
  return out;
}

TraceSpec TraceSpec::parse(std::string_view text, int d) {
  TraceSpec spec(d);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto semi = t.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("trace line without `;`: " + t);
    Composition mu0 = parse_composition(field(std::string_view(t).substr(0, semi), "mu0"));
    LPoly a = LPoly::parse(field(std::string_view(t).substr(semi + 1), "alpha"), d);
    if (spec.alphas_.count(mu0)) throw std::invalid_argument("repeated trace parameter " + mu0.to_string());
    spec.set(mu0, a);
  }
  return spec;
}

TraceSpec& TraceSpec::operator+=(const TraceSpec& o) {
  if (o.d_ != d_) throw std::invalid_argument("trace spec level mismatch");
  for (const auto& [mu0, a] : o.alphas_) set(mu0, alpha(mu0) + a);
  return *this;
}

TraceSpec operator*(const LPoly& c, const TraceSpec& s) {
  TraceSpec r(s.d_);
  for (const auto& [mu0, a] : s.alphas_) r.set(mu0, c * a);
  return r;
}

TraceSpec basic_spec(const Composition& mu0) {
  TraceSpec s(mu0.d());
  s.set(mu0, LPoly(1));
  return s;
}

std::vector<TraceSpec> all_basic_specs(int d) {
  std::vector<TraceSpec> out;
  for (const auto& mu0 : basic_compositions(d)) out.push_back(basic_spec(mu0));
  return out;
}

// ---------------------------------------------------------------------------

LPoly associated_trace(const TraceSpec& spec, const ParabolicElem& x) {
  if (x.mu().d() != spec.d()) throw std::invalid_argument("trace spec level mismatch");
  if (x.mu().size() == 0) throw std::invalid_argument("associated trace needs n >= 1");
  LPoly a = spec.alpha(x.mu().base());
  if (a.is_zero() || x.is_zero()) return LPoly();
  return a * tau_parabolic(x);
}

LPoly block_contribution(const TraceSpec& spec, const Block& b) {
  return associated_trace(spec, b.trace());
}

LPoly rho_blocks(const TraceSpec& spec, const BlockMatrix& m) {
  if (m.d() != spec.d()) throw std::invalid_argument("trace spec level mismatch");
  LPoly acc;
  for (const auto& [mu, b] : m.blocks()) acc += block_contribution(spec, b);
  return acc;
}

LPoly rho(const TraceSpec& spec, const YElem& x) {
  if (x.d() != spec.d()) {
    throw std::invalid_argument("trace spec has d=" + std::to_string(spec.d()) + " but the element has d=" +
                                std::to_string(x.d()));
  }
  return rho_blocks(spec, psi(x));
}

LPoly symmetrizing_rho(const YElem& x) {
  LPoly acc;
  const BlockMatrix m = psi(x);
  for (const auto& [mu, b] : m.blocks()) acc += b.trace().elem().coeff(Perm::identity(x.n()));
  return acc;
}

LPoly symmetrizing_tilde(const YElem& x) {
  Rat scale = 1;
  for (int i = 0; i < x.n(); ++i) scale *= x.d();
  return Cyclo(scale) * x.coeff(std::vector<int>(static_cast<std::size_t>(x.n()), 0), Perm::identity(x.n()));
}

// ---------------------------------------------------------------------------

ESystem::ESystem(int d, std::vector<int> S) : d_(d), S_(std::move(S)) {
  if (d < 1) throw std::invalid_argument("E-system needs d >= 1");
  if (S_.empty()) throw std::invalid_argument("E-system subset S is empty");
  std::set<int> seen;
  for (int a : S_) {
    if (a < 1 || a > d) {
      throw std::invalid_argument("E-system index " + std::to_string(a) + " outside 1.." + std::to_string(d));
    }
    if (!seen.insert(a).second) throw std::invalid_argument("E-system index " + std::to_string(a) + " repeated");
  }
  std::sort(S_.begin(), S_.end());
}

Cyclo ESystem::c(long long b) const {
  Cyclo acc;
  for (int a : S_) acc += root_power(d_, a, b);
  return acc * Cyclo(Rat(1, static_cast<long>(S_.size())));
}

TraceSpec ESystem::spec() const {
  TraceSpec out(d_);
  const Cyclo inv_size(Rat(1, static_cast<long>(S_.size())));
  for (const auto& mu0 : basic_compositions(d_)) {
    bool inside = true;
    for (int a = 1; a <= d_; ++a) {
      if (mu0.part(a) != 0 && !std::binary_search(S_.begin(), S_.end(), a)) inside = false;
    }
    if (inside) out.set(mu0, inv_size * strand_factor().pow(mu0.size() - 1));
  }
  return out;
}

ESystem::Point ESystem::point(std::complex<double> q, std::complex<double> z, bool flip_branch) const {
  if (q == 0.0 || z == 0.0) throw std::domain_error("q and z must be nonzero");
  const double e = 1.0 / static_cast<double>(S_.size());
  std::complex<double> lambda = (z + (1.0 - q) * e) / (q * z);
  if (std::abs(lambda) < 1e-300) throw std::domain_error("lambda_S vanishes at this (q, z)");
  std::complex<double> sl = std::sqrt(lambda);
  if (flip_branch) sl = -sl;
  std::complex<double> sq = std::sqrt(q);
  // u = sqrt(q) sqrt(lambda) keeps u and v on one branch of sqrt(lambda).
  return Point{sq * sl, (q - 1.0) * sl, 1.0 / sq};
}

Cyclo esystem_c(int d, const std::vector<int>& S, long long b) { return ESystem(d, S).c(b); }

TraceSpec jl_spec(int d, const std::vector<int>& S) { return ESystem(d, S).spec(); }

// ---------------------------------------------------------------------------

bool semisimple_at(int n, std::complex<double> q, double tol) {
  if (std::abs(q) <= tol) throw std::invalid_argument("q must be invertible");
  const std::complex<double> q2 = q * q;
  for (int m = 1; m <= n; ++m) {
    std::complex<double> f = 0.0, p = 1.0;
    for (int k = 0; k < m; ++k, p *= q2) f += p;
    if (std::abs(f) <= tol) return false;
  }
  return true;
}

bool semisimple_at(int n, const Cyclo& q) {
  if (q.is_zero()) throw std::invalid_argument("q must be invertible");
  const Cyclo q2 = q * q;
  for (int m = 1; m <= n; ++m) {
    Cyclo f, p(1);
    for (int k = 0; k < m; ++k, p *= q2) f += p;
    if (f.is_zero()) return false;
  }
  return true;
}

bool semisimple_at(int n, const LPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("q must be invertible");
  const LPoly q2 = q * q;
  for (int m = 1; m <= n; ++m) {
    LPoly f, p(1);
    for (int k = 0; k < m; ++k, p *= q2) f += p;
    if (f.is_zero()) return false;
  }
  return true;
}

}  // namespace yhecke
