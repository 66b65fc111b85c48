#pragma once

#include "ncres/scalar_expr.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace ncres {

/// Polynomial in xi_n with ScalarExpr coefficients; coeffs()[k] multiplies xi_n^k.
class XiPoly {
 public:
  XiPoly() = default;
  XiPoly(ScalarExpr c);  // NOLINT(google-explicit-constructor)
  explicit XiPoly(std::vector<ScalarExpr> coeffs);

  /// xi_n itself.
  static XiPoly xin();
  /// (xi_n - root)^k expanded.
  static XiPoly linear_power(const GaussianRational& root, int k);

  const std::vector<ScalarExpr>& coeffs() const { return coeffs_; }
  const ScalarExpr& operator[](std::size_t k) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  XiPoly& operator+=(const XiPoly& o);
  XiPoly& operator-=(const XiPoly& o);
  friend XiPoly operator+(XiPoly a, const XiPoly& b) { return a += b; }
  friend XiPoly operator-(XiPoly a, const XiPoly& b) { return a -= b; }
  friend XiPoly operator*(const XiPoly& a, const XiPoly& b);
  XiPoly operator-() const;
  friend bool operator==(const XiPoly&, const XiPoly&) = default;

  XiPoly scaled(const ScalarExpr& c) const;
  XiPoly derivative() const;
  XiPoly map_coeffs(const std::function<ScalarExpr(const ScalarExpr&)>& f) const;

  ScalarExpr evaluate(const GaussianRational& at) const;
  /// Coefficients of p(at + t) as a polynomial in t.
  XiPoly shifted(const GaussianRational& at) const;
  /// Exact quotient by (xi_n - root); the remainder must vanish.
  XiPoly divided_by_root(const GaussianRational& root) const;
  /// Quotient and remainder by a monic polynomial with constant coefficients.
  std::pair<XiPoly, XiPoly> divmod_monic(const XiPoly& divisor) const;

  std::string str() const;

 private:
  void trim();
  std::vector<ScalarExpr> coeffs_;
};

/// Rational function numerator / ((xi_n - i)^p (xi_n + i)^q). Canonical: the
/// numerator does not vanish at xi_n = i when p > 0, nor at -i when q > 0.
class XiRational {
 public:
  XiRational() = default;
  XiRational(ScalarExpr c);  // NOLINT(google-explicit-constructor)
  XiRational(long c) : XiRational(ScalarExpr(c)) {}  // NOLINT
  XiRational(XiPoly numerator, int p = 0, int q = 0);

  static XiRational xin() { return XiRational{XiPoly::xin()}; }
  /// 1 / (1 + xi_n^2)^k.
  static XiRational inverse_norm_power(int k);

  const XiPoly& numerator() const { return num_; }
  int p() const { return p_; }
  int q() const { return q_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_proper() const { return num_.degree() < p_ + q_; }

  XiRational& operator+=(const XiRational& o);
  XiRational& operator-=(const XiRational& o);
  XiRational& operator*=(const XiRational& o);
  friend XiRational operator+(XiRational a, const XiRational& b) { return a += b; }
  friend XiRational operator-(XiRational a, const XiRational& b) { return a -= b; }
  friend XiRational operator*(XiRational a, const XiRational& b) { return a *= b; }
  XiRational operator-() const;
  XiRational scaled(const ScalarExpr& c) const;
  friend bool operator==(const XiRational&, const XiRational&) = default;

  /// d/d xi_n.
  XiRational diff_xin() const;
  /// d/d s for an alphabet symbol (acts on coefficients).
  XiRational diff(Symbol s) const;
  XiRational map_coeffs(const std::function<ScalarExpr(const ScalarExpr&)>& f) const;
  XiRational on_unit_sphere() const;

  std::complex<double> evaluate(std::complex<double> xin,
                                const std::function<std::complex<double>(Symbol)>& value) const;

  std::string str() const;

 private:
  void canonicalize();
  XiPoly num_;
  int p_ = 0;
  int q_ = 0;
};

/// f = polynomial + sum_k upper[k-1]/(xi_n - i)^k + sum_k lower[k-1]/(xi_n + i)^k.
struct PartialFractions {
  XiPoly polynomial;
  std::vector<ScalarExpr> upper;
  std::vector<ScalarExpr> lower;

  XiRational recombine() const;
  XiRational upper_part() const;
  XiRational lower_part() const;
};

PartialFractions partial_fractions(const XiRational& f);

/// Canonical form (idempotent; values are canonical on construction).
inline XiRational canonicalize(const XiRational& f) { return f; }
inline ScalarExpr canonicalize(const ScalarExpr& e) { return e; }

}  // namespace ncres
