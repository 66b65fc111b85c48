#include "ncres/xi_rational.hpp"

#include <stdexcept>

namespace ncres {

namespace {

const GaussianRational kI = GaussianRational::i();

GaussianRational binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return GaussianRational{Rational{b}};
}

const ScalarExpr kZero{};

}  // namespace

// ---- XiPoly -----------------------------------------------------------------

XiPoly::XiPoly(ScalarExpr c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

XiPoly::XiPoly(std::vector<ScalarExpr> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XiPoly XiPoly::xin() { return XiPoly{std::vector<ScalarExpr>{ScalarExpr{}, ScalarExpr{1}}}; }

XiPoly XiPoly::linear_power(const GaussianRational& root, int k) {
  XiPoly r{ScalarExpr{1}};
  const XiPoly factor{std::vector<ScalarExpr>{ScalarExpr{-root}, ScalarExpr{1}}};
  for (int m = 0; m < k; ++m) r = r * factor;
  return r;
}

const ScalarExpr& XiPoly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

void XiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XiPoly& XiPoly::operator+=(const XiPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

XiPoly& XiPoly::operator-=(const XiPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

XiPoly operator*(const XiPoly& a, const XiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ScalarExpr> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return XiPoly{std::move(out)};
}

XiPoly XiPoly::operator-() const {
  XiPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

XiPoly XiPoly::scaled(const ScalarExpr& c) const {
  if (c.is_zero()) return {};
  XiPoly r = *this;
  for (auto& v : r.coeffs_) v = v * c;
  r.trim();
  return r;
}

XiPoly XiPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ScalarExpr> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return XiPoly{std::move(out)};
}

XiPoly XiPoly::map_coeffs(const std::function<ScalarExpr(const ScalarExpr&)>& f) const {
  std::vector<ScalarExpr> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(f(c));
  return XiPoly{std::move(out)};
}

ScalarExpr XiPoly::evaluate(const GaussianRational& at) const {
  ScalarExpr r;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    r *= at;
    r += coeffs_[k];
  }
  return r;
}

XiPoly XiPoly::shifted(const GaussianRational& at) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<ScalarExpr> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k > i; --k) c[k - 1] += c[k] * at;
  }
  return XiPoly{std::move(c)};
}

XiPoly XiPoly::divided_by_root(const GaussianRational& root) const {
  if (coeffs_.empty()) return {};
  std::vector<ScalarExpr> q(coeffs_.size() - 1);
  ScalarExpr carry;
  for (std::size_t k = coeffs_.size(); k-- > 1;) {
    carry = coeffs_[k] + carry * root;
    q[k - 1] = carry;
  }
  ScalarExpr remainder = coeffs_[0] + carry * root;
  if (!remainder.is_zero()) throw std::logic_error("divided_by_root: nonzero remainder");
  return XiPoly{std::move(q)};
}

std::pair<XiPoly, XiPoly> XiPoly::divmod_monic(const XiPoly& divisor) const {
  const int dd = divisor.degree();
  if (dd < 0 || !(divisor.coeffs_.back() == ScalarExpr{1})) throw std::invalid_argument("divmod_monic: divisor not monic");
  if (degree() < dd) return {XiPoly{}, *this};
  std::vector<ScalarExpr> rem = coeffs_;
  std::vector<ScalarExpr> quot(coeffs_.size() - dd);
  for (int k = degree(); k >= dd; --k) {
    ScalarExpr lead = rem[k];
    if (lead.is_zero()) continue;
    quot[k - dd] = lead;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= lead * divisor.coeffs_[j];
  }
  return {XiPoly{std::move(quot)}, XiPoly{std::move(rem)}};
}

std::string XiPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = coeffs_[k].str();
    if (k == 0) {
      out += c;
      continue;
    }
    std::string power = k == 1 ? "xin" : "xin^" + std::to_string(k);
    out += c == "1" ? power : "(" + c + ")*" + power;
  }
  return out;
}

// ---- XiRational -------------------------------------------------------------

XiRational::XiRational(ScalarExpr c) : num_(std::move(c)) {}

XiRational::XiRational(XiPoly numerator, int p, int q) : num_(std::move(numerator)), p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("XiRational: negative pole order");
  canonicalize();
}

XiRational XiRational::inverse_norm_power(int k) { return XiRational{XiPoly{ScalarExpr{1}}, k, k}; }

void XiRational::canonicalize() {
  if (num_.is_zero()) {
    p_ = q_ = 0;
    return;
  }
  while (p_ > 0 && num_.evaluate(kI).is_zero()) {
    num_ = num_.divided_by_root(kI);
    --p_;
  }
  while (q_ > 0 && num_.evaluate(-kI).is_zero()) {
    num_ = num_.divided_by_root(-kI);
    --q_;
  }
}

XiRational& XiRational::operator+=(const XiRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int P = std::max(p_, o.p_);
  const int Q = std::max(q_, o.q_);
  XiPoly a = num_;
  if (P > p_) a = a * XiPoly::linear_power(kI, P - p_);
  if (Q > q_) a = a * XiPoly::linear_power(-kI, Q - q_);
  XiPoly b = o.num_;
  if (P > o.p_) b = b * XiPoly::linear_power(kI, P - o.p_);
  if (Q > o.q_) b = b * XiPoly::linear_power(-kI, Q - o.q_);
  num_ = a + b;
  p_ = P;
  q_ = Q;
  canonicalize();
  return *this;
}

XiRational& XiRational::operator-=(const XiRational& o) { return *this += -o; }

XiRational& XiRational::operator*=(const XiRational& o) {
  if (is_zero() || o.is_zero()) return *this = XiRational{};
  num_ = num_ * o.num_;
  p_ += o.p_;
  q_ += o.q_;
  canonicalize();
  return *this;
}

XiRational XiRational::operator-() const {
  XiRational r = *this;
  r.num_ = -r.num_;
  return r;
}

XiRational XiRational::scaled(const ScalarExpr& c) const {
  XiRational r = *this;
  r.num_ = r.num_.scaled(c);
  r.canonicalize();
  return r;
}

XiRational XiRational::diff_xin() const {
  // (N' (x-i)(x+i) - p N (x+i) - q N (x-i)) / ((x-i)^(p+1) (x+i)^(q+1))
  const XiPoly xm = XiPoly::linear_power(kI, 1);
  const XiPoly xp = XiPoly::linear_power(-kI, 1);
  XiPoly n = num_.derivative() * xm * xp;
  if (p_ > 0) n -= (num_ * xp).scaled(ScalarExpr{p_});
  if (q_ > 0) n -= (num_ * xm).scaled(ScalarExpr{q_});
  return XiRational{std::move(n), p_ + 1, q_ + 1};
}

XiRational XiRational::diff(Symbol s) const {
  return XiRational{num_.map_coeffs([&](const ScalarExpr& c) { return c.diff(s); }), p_, q_};
}

XiRational XiRational::map_coeffs(const std::function<ScalarExpr(const ScalarExpr&)>& f) const {
  return XiRational{num_.map_coeffs(f), p_, q_};
}

XiRational XiRational::on_unit_sphere() const {
  return map_coeffs([](const ScalarExpr& c) { return c.on_unit_sphere(); });
}

std::complex<double> XiRational::evaluate(std::complex<double> xin,
                                          const std::function<std::complex<double>(Symbol)>& value) const {
  std::complex<double> n = 0;
  for (std::size_t k = num_.coeffs().size(); k-- > 0;) n = n * xin + num_.coeffs()[k].evaluate(value);
  const std::complex<double> i{0, 1};
  return n / (std::pow(xin - i, p_) * std::pow(xin + i, q_));
}

std::string XiRational::str() const {
  std::string n = num_.str();
  if (p_ == 0 && q_ == 0) return n;
  std::string d;
  if (p_ > 0) d += p_ == 1 ? "(xin-i)" : "(xin-i)^" + std::to_string(p_);
  if (q_ > 0) {
    if (!d.empty()) d += "*";
    d += q_ == 1 ? "(xin+i)" : "(xin+i)^" + std::to_string(q_);
  }
  return "(" + n + ")/(" + d + ")";
}

// ---- Partial fractions ------------------------------------------------------

namespace {

// Principal part of N(x) / ((x - a)^m (x - b)^other) at x = a, as coefficients
// of (x - a)^{-k}, k = 1..m.
std::vector<ScalarExpr> principal_part(const XiPoly& num, const GaussianRational& a, int m,
                                       const GaussianRational& b, int other) {
  std::vector<ScalarExpr> out(m);
  if (m == 0) return out;
  const XiPoly shifted = num.shifted(a);  // N(a + t)
  // (a - b + t)^{-other} = (a-b)^{-other} sum_k C(other+k-1, k) (-t/(a-b))^k
  const GaussianRational d = a - b;
  std::vector<GaussianRational> series(m);
  for (int k = 0; k < m; ++k) {
    GaussianRational c = other == 0 ? GaussianRational(k == 0 ? 1 : 0) : binomial(other + k - 1, k);
    if (k % 2 == 1) c = -c;
    series[k] = c * d.pow(-other - k);
  }
  // coefficient of t^j in N(a+t) * series, j < m; (x-a)^{-k} takes j = m - k.
  for (int j = 0; j < m; ++j) {
    ScalarExpr c;
    for (int l = 0; l <= j; ++l) {
      if (series[j - l].is_zero()) continue;
      c += shifted[l] * series[j - l];
    }
    out[m - j - 1] = std::move(c);
  }
  return out;
}

}  // namespace

PartialFractions partial_fractions(const XiRational& f) {
  PartialFractions pf;
  pf.upper = principal_part(f.numerator(), kI, f.p(), -kI, f.q());
  pf.lower = principal_part(f.numerator(), -kI, f.q(), kI, f.p());
  const XiPoly denom = XiPoly::linear_power(kI, f.p()) * XiPoly::linear_power(-kI, f.q());
  pf.polynomial = f.numerator().divmod_monic(denom).first;
  return pf;
}

XiRational PartialFractions::upper_part() const {
  XiRational r;
  const int m = static_cast<int>(upper.size());
  for (int k = 1; k <= m; ++k) {
    if (upper[k - 1].is_zero()) continue;
    r += XiRational{XiPoly{upper[k - 1]}, k, 0};
  }
  return r;
}

XiRational PartialFractions::lower_part() const {
  XiRational r;
  const int m = static_cast<int>(lower.size());
  for (int k = 1; k <= m; ++k) {
    if (lower[k - 1].is_zero()) continue;
    r += XiRational{XiPoly{lower[k - 1]}, 0, k};
  }
  return r;
}

XiRational PartialFractions::recombine() const { return XiRational{polynomial} + upper_part() + lower_part(); }

}  // namespace ncres
