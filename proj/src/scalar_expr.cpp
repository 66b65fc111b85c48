#include "ncres/scalar_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncres {

// ---- Monomial ---------------------------------------------------------------

Monomial::Monomial(Symbol s, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent > 0) factors_.push_back({s, static_cast<std::uint16_t>(exponent)});
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

int Monomial::exponent(Symbol s) const {
  for (const auto& f : factors_) {
    if (f.symbol == s) return f.exponent;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->symbol == b->symbol) {
      r.factors_.push_back({a->symbol, static_cast<std::uint16_t>(a->exponent + b->exponent)});
      ++a;
      ++b;
    } else if (a->symbol < b->symbol) {
      r.factors_.push_back(*a++);
    } else {
      r.factors_.push_back(*b++);
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, o.factors_.end());
  return r;
}

Monomial Monomial::lowered(Symbol s, int by) const {
  Monomial r = *this;
  for (auto it = r.factors_.begin(); it != r.factors_.end(); ++it) {
    if (it->symbol == s) {
      if (it->exponent < by) break;
      it->exponent = static_cast<std::uint16_t>(it->exponent - by);
      if (it->exponent == 0) r.factors_.erase(it);
      return r;
    }
  }
  throw std::logic_error("Monomial::lowered: exponent too small");
}

Monomial Monomial::without(Symbol s) const {
  Monomial r = *this;
  std::erase_if(r.factors_, [&](const Factor& f) { return f.symbol == s; });
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  auto b = o.factors_.begin();
  for (const auto& f : factors_) {
    while (b != o.factors_.end() && b->symbol < f.symbol) ++b;
    if (b == o.factors_.end() || b->symbol != f.symbol || b->exponent < f.exponent) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r = *this;
  for (const auto& f : divisor.factors_) r = r.lowered(f.symbol, f.exponent);
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto c = std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                  b.factors_.end());
  if (c != 0) return c;
  return a.degree() <=> b.degree();
}

std::string Monomial::str() const {
  std::string out;
  const auto& alpha = Alphabet::instance();
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    out += alpha.name(f.symbol);
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

// ---- ScalarExpr -------------------------------------------------------------

ScalarExpr::ScalarExpr(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

ScalarExpr::ScalarExpr(Symbol s) { terms_.emplace(Monomial{s}, GaussianRational{1}); }

ScalarExpr::ScalarExpr(const Monomial& m, GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

bool ScalarExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussianRational ScalarExpr::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? GaussianRational{} : it->second;
}

int ScalarExpr::degree_in(Symbol s) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
  return d;
}

bool ScalarExpr::depends_on(Symbol s) const { return degree_in(s) > 0; }

void ScalarExpr::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

void ScalarExpr::add_product(const ScalarExpr& a, const ScalarExpr& b) {
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) add_term(ma * mb, ca * cb);
  }
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  ScalarExpr r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_constant()) return b * a.constant();
  if (b.is_constant()) return a * b.constant();
  r.add_product(a, b);
  return r;
}

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& o) {
  *this = *this * o;
  return *this;
}

ScalarExpr& ScalarExpr::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ScalarExpr ScalarExpr::operator-() const {
  ScalarExpr r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

ScalarExpr ScalarExpr::pow(int e) const {
  if (e < 0) throw std::invalid_argument("ScalarExpr::pow: negative exponent");
  ScalarExpr r{1};
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

ScalarExpr ScalarExpr::diff(Symbol s) const {
  ScalarExpr r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(s);
    if (e > 0) r.add_term(m.lowered(s), c * GaussianRational(e));
  }
  return r;
}

ScalarExpr ScalarExpr::transform(const std::function<ScalarExpr(const Monomial&)>& f) const {
  ScalarExpr r;
  for (const auto& [m, c] : terms_) r += f(m) * c;
  return r;
}

ScalarExpr ScalarExpr::substitute(Symbol s, const ScalarExpr& value) const {
  return substitute(std::map<Symbol, ScalarExpr>{{s, value}});
}

ScalarExpr ScalarExpr::substitute(const std::map<Symbol, ScalarExpr>& values) const {
  ScalarExpr r;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    ScalarExpr factor{c};
    for (const auto& f : m.factors()) {
      auto it = values.find(f.symbol);
      if (it == values.end()) {
        rest = rest * Monomial{f.symbol, f.exponent};
      } else {
        factor = factor * it->second.pow(f.exponent);
      }
    }
    if (factor.is_zero()) continue;
    for (const auto& [fm, fc] : factor.terms_) r.add_term(fm * rest, fc);
  }
  return r;
}

ScalarExpr ScalarExpr::on_unit_sphere() const {
  const Symbol x1 = sym::xi(1), x2 = sym::xi(2), x3 = sym::xi(3);
  ScalarExpr r;
  // xi3^(2q+e) -> xi3^e (1 - xi1^2 - xi2^2)^q
  std::vector<ScalarExpr> powers{ScalarExpr{1}};
  const ScalarExpr base = ScalarExpr{1} - ScalarExpr{Monomial{x1, 2}, 1} - ScalarExpr{Monomial{x2, 2}, 1};
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(x3);
    if (e < 2) {
      r.add_term(m, c);
      continue;
    }
    int q = e / 2;
    while (static_cast<int>(powers.size()) <= q) powers.push_back(powers.back() * base);
    Monomial rest = m.without(x3) * Monomial{x3, e % 2};
    for (const auto& [pm, pc] : powers[q].terms_) r.add_term(pm * rest, pc * c);
  }
  return r;
}

ScalarExpr ScalarExpr::coefficient(Symbol s, int k) const {
  ScalarExpr r;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(s) == k) r.add_term(m.without(s), c);
  }
  return r;
}

std::complex<double> ScalarExpr::evaluate(const std::function<std::complex<double>(Symbol)>& value) const {
  std::complex<double> total = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t{c.re().get_d(), c.im().get_d()};
    for (const auto& f : m.factors()) t *= std::pow(value(f.symbol), static_cast<int>(f.exponent));
    total += t;
  }
  return total;
}

std::string ScalarExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coef;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      coef = (negative ? -c : c).str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      coef = (negative ? -c : c).str();
    } else {
      coef = c.str();
    }
    std::string term;
    if (m.is_one()) {
      term = coef;
    } else if (coef == "1") {
      term = m.str();
    } else {
      term = coef + "*" + m.str();
    }
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

ScalarExpr xi_prime_norm_squared() {
  ScalarExpr r;
  for (int j = 1; j <= 3; ++j) r.add_term(Monomial{sym::xi(j), 2}, 1);
  return r;
}

}  // namespace ncres
