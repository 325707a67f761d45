#include "yhecke/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace yhecke {

namespace {

using QPoly = std::vector<Rat>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a / b over Q; b must be nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rat(0));
  const Rat& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    Rat c = a[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::string trim_ws(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

Rat parse_rat(std::string_view text) {
  std::string s = trim_ws(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced parentheses");
    if (s[i] == sep && depth == 0) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses");
  parts.emplace_back(s.substr(start));
  return parts;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  // x^d - 1 divided by Phi_e for every proper divisor e.
  std::vector<long long> num(static_cast<std::size_t>(d) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    std::vector<long long> den = cyclotomic_polynomial(e);
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (std::size_t k = num.size(); k-- >= den.size();) {
      long long c = num[k];  // den is monic
      std::size_t shift = k - (den.size() - 1);
      q[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

int euler_phi(int d) {
  if (d < 1) throw std::invalid_argument("euler_phi: order must be positive");
  int r = d;
  int m = d;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

namespace detail {

struct CycloField {
  int d = 1;
  int phi = 1;
  QPoly modulus;                   // Phi_d, monic, length phi + 1
  std::vector<QPoly> zeta_powers;  // zeta^e reduced, e = 0..d-1, each of length phi

  QPoly reduce(QPoly p) const {
    for (std::size_t k = p.size(); k-- > static_cast<std::size_t>(phi);) {
      if (p[k] == 0) continue;
      Rat c = p[k];
      std::size_t shift = k - static_cast<std::size_t>(phi);
      for (int j = 0; j <= phi; ++j) p[shift + static_cast<std::size_t>(j)] -= c * modulus[static_cast<std::size_t>(j)];
    }
    p.resize(static_cast<std::size_t>(phi), Rat(0));
    return p;
  }
};

namespace {

const CycloField* field_for(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  if (d < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second.get();
  auto f = std::make_unique<CycloField>();
  f->d = d;
  f->phi = euler_phi(d);
  for (long long c : cyclotomic_polynomial(d)) f->modulus.emplace_back(static_cast<long>(c));
  for (int e = 0; e < d; ++e) {
    QPoly x(static_cast<std::size_t>(e) + 1, Rat(0));
    x[static_cast<std::size_t>(e)] = 1;
    if (x.size() < static_cast<std::size_t>(f->phi)) x.resize(static_cast<std::size_t>(f->phi), Rat(0));
    f->zeta_powers.push_back(f->reduce(std::move(x)));
  }
  return cache.emplace(d, std::move(f)).first->second.get();
}

}  // namespace
}  // namespace detail

Cyclo::Cyclo() : field_(detail::field_for(1)), coeffs_{Rat(0)} {}

Cyclo::Cyclo(const Rat& r, int order) : field_(detail::field_for(order)) {
  coeffs_.assign(static_cast<std::size_t>(field_->phi), Rat(0));
  coeffs_[0] = r;
}

Cyclo Cyclo::zeta_power(int d, long long e) {
  const detail::CycloField* f = detail::field_for(d);
  long long r = ((e % d) + d) % d;
  return Cyclo(f, f->zeta_powers[static_cast<std::size_t>(r)]);
}

int Cyclo::order() const { return field_->d; }

bool Cyclo::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool Cyclo::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool Cyclo::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Cyclo Cyclo::promoted(int d) const {
  if (d == order()) return *this;
  if (order() != 1) {
    throw std::invalid_argument("cannot combine cyclotomic values of orders " +
                                std::to_string(order()) + " and " + std::to_string(d));
  }
  return Cyclo(coeffs_[0], d);
}

void Cyclo::unify(const Cyclo& o) {
  if (field_ != o.field_ && order() == 1) *this = promoted(o.order());
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  unify(o);
  if (field_ == o.field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    Cyclo p = o.promoted(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += p.coeffs_[i];
  }
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (o.order() == 1) {
    for (Rat& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (order() == 1) {
    Rat s = coeffs_[0];
    *this = o;
    for (Rat& c : coeffs_) c *= s;
    return *this;
  }
  if (field_ != o.field_) (void)o.promoted(order());  // throws
  if (field_->phi == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  QPoly prod(2 * coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = field_->reduce(std::move(prod));
  return *this;
}

Cyclo Cyclo::times_zeta_power(long long e) const {
  if (order() == 1) return *this;
  return *this * zeta_power(order(), e);
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic value");
  if (is_rational()) {
    Cyclo r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid: s*a + t*Phi = 1.
  QPoly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  QPoly r0 = field_->modulus, r1 = a;
  QPoly s0, s1{Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_d is irreducible.
  Rat c = r0.front();
  for (Rat& x : s0) x /= c;
  s0.resize(std::max(s0.size(), static_cast<std::size_t>(field_->phi)), Rat(0));
  return Cyclo(field_, field_->reduce(std::move(s0)));
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / order());
  std::complex<double> acc = 0.0, p = 1.0;
  for (const Rat& c : coeffs_) {
    acc += c.get_d() * p;
    p *= z;
  }
  return acc;
}

std::string Cyclo::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::string s = "(";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) s += " + ";
    s += coeffs_[k].get_str();
    if (k == 1) s += "*z";
    if (k > 1) s += "*z^" + std::to_string(k);
  }
  return s + ")";
}

Cyclo Cyclo::parse(std::string_view text, int order) {
  std::string s = trim_ws(text);
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  if (s.front() != '(') return Cyclo(parse_rat(s), 1);
  if (s.back() != ')') throw std::invalid_argument("unterminated coefficient '" + s + "'");
  Cyclo acc(Rat(0), order);
  for (const std::string& part : split_top(std::string_view(s).substr(1, s.size() - 2), '+')) {
    std::string t = trim_ws(part);
    long long power = 0;
    auto star = t.find('*');
    std::string coef = t.substr(0, star);
    if (star != std::string::npos) {
      std::string zt = trim_ws(std::string_view(t).substr(star + 1));
      if (zt == "z") {
        power = 1;
      } else if (zt.rfind("z^", 0) == 0) {
        power = std::stoll(zt.substr(2));
      } else {
        throw std::invalid_argument("malformed cyclotomic term '" + t + "'");
      }
    }
    acc += Cyclo(parse_rat(coef), 1) * zeta_power(order, power);
  }
  return acc;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.order() == 1) return a.promoted(b.order()).coeffs_ == b.coeffs_;
  if (b.order() == 1) return a.coeffs_ == b.promoted(a.order()).coeffs_;
  (void)a.promoted(b.order());  // throws
  return false;
}

Cyclo root_power(int d, int a, long long s) {
  if (a < 1 || a > d) {
    throw std::invalid_argument("root_power: letter " + std::to_string(a) + " outside 1.." +
                                std::to_string(d));
  }
  return Cyclo::zeta_power(d, static_cast<long long>(a - 1) * s);
}

// ---------------------------------------------------------------------------

LPoly::LPoly(const Cyclo& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0, 0}, c);
}

LPoly LPoly::monomial(const Cyclo& c, int eu, int ev, int eg) {
  LPoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponent{eu, ev, eg}, c);
  return p;
}

Cyclo LPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclo() : it->second;
}

int LPoly::order() const {
  int d = 1;
  for (const auto& [e, c] : terms_) d = std::max(d, c.order());
  return d;
}

bool LPoly::is_gamma_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first[2] == 0; });
}

void LPoly::add_term(const Exponent& e, const Cyclo& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LPoly::add_scaled(const LPoly& o, const Cyclo& c, const Exponent& e) {
  if (c.is_zero()) return;
  for (const auto& [oe, oc] : o.terms_) {
    add_term({oe[0] + e[0], oe[1] + e[1], oe[2] + e[2]}, c.is_one() ? oc : oc * c);
  }
}

LPoly& LPoly::operator+=(const LPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LPoly& LPoly::operator*=(const Cyclo& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly r;
  const LPoly& small = a.size() <= b.size() ? a : b;
  const LPoly& big = a.size() <= b.size() ? b : a;
  for (const auto& [e, c] : small.terms_) r.add_scaled(big, c, e);
  return r;
}

LPoly& LPoly::operator*=(const LPoly& o) { return *this = *this * o; }

bool operator==(const LPoly& a, const LPoly& b) { return a.terms_ == b.terms_; }

LPoly LPoly::monomial_inverse() const {
  if (terms_.size() != 1) {
    throw std::invalid_argument(terms_.empty() ? "monomial_inverse of zero"
                                               : "monomial_inverse of a non-monomial");
  }
  const auto& [e, c] = *terms_.begin();
  return monomial(c.inverse(), -e[0], -e[1], -e[2]);
}

LPoly LPoly::pow(int e) const {
  if (e < 0) return monomial_inverse().pow(-e);
  LPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::complex<double> LPoly::eval(std::complex<double> u0, std::complex<double> v0,
                                 std::complex<double> g0) const {
  const std::array<std::complex<double>, 3> at{u0, v0, g0};
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (std::size_t k = 0; k < 3; ++k) {
      if (e[k] < 0 && at[k] == 0.0) throw std::domain_error("eval: negative power of zero");
      t *= std::pow(at[k], e[k]);
    }
    acc += t;
  }
  return acc;
}

std::string LPoly::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr std::array<const char*, 3> names{"u", "v", "g"};
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += it->second.to_string();
    for (std::size_t k = 0; k < 3; ++k) {
      if (it->first[k] != 0) s += std::string(" * ") + names[k] + "^" + std::to_string(it->first[k]);
    }
  }
  return s;
}

std::vector<std::string> LPoly::to_machine_lines() const {
  std::vector<std::string> lines;
  int d = order();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::ostringstream os;
    os << it->first[0] << ' ' << it->first[1] << ' ' << it->first[2];
    Cyclo c = it->second.promoted(d);
    for (const Rat& r : c.coeffs()) os << ' ' << r.get_str();
    lines.push_back(os.str());
  }
  return lines;
}

LPoly LPoly::parse(std::string_view text, int order) {
  std::string s = trim_ws(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  LPoly p;
  if (s == "0") return p;
  for (const std::string& term : split_top(s, '+')) {
    auto factors = split_top(term, '*');
    Cyclo c = Cyclo::parse(factors.front(), order);
    Exponent e{0, 0, 0};
    for (std::size_t i = 1; i < factors.size(); ++i) {
      std::string f = trim_ws(factors[i]);
      if (f.empty()) throw std::invalid_argument("malformed term '" + term + "'");
      std::size_t k;
      switch (f[0]) {
        case 'u': k = 0; break;
        case 'v': k = 1; break;
        case 'g': k = 2; break;
        default: throw std::invalid_argument("unknown variable in '" + f + "'");
      }
      int ex = 1;
      if (f.size() > 1) {
        if (f[1] != '^') throw std::invalid_argument("malformed power '" + f + "'");
        std::size_t used = 0;
        ex = std::stoi(f.substr(2), &used);
        if (used != f.size() - 2) throw std::invalid_argument("malformed power '" + f + "'");
      }
      e[k] += ex;
    }
    p.add_term(e, c);
  }
  return p;
}

LPoly strand_factor() { return LPoly::v(-1) - LPoly::monomial(Cyclo(1), 2, -1, 0); }

}  // namespace yhecke
