#pragma once

#include "ncres/alphabet.hpp"
#include "ncres/gaussian_rational.hpp"

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ncres {

/// Product of alphabet symbols with positive exponents, sorted by symbol id.
class Monomial {
 public:
  struct Factor {
    Symbol symbol;
    std::uint16_t exponent;
    friend auto operator<=>(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  explicit Monomial(Symbol s, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(Symbol s) const;

  Monomial operator*(const Monomial& o) const;
  /// Exponent of s lowered by `by` (must be present to that power).
  Monomial lowered(Symbol s, int by = 1) const;
  Monomial without(Symbol s) const;
  bool divides(const Monomial& o) const;
  Monomial quotient(const Monomial& divisor) const;  // requires divides()

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<Factor> factors_;
};

/// Exact polynomial over Q(i) in the symbol alphabet, kept in canonical form:
/// monomials sorted, no zero coefficients.
class ScalarExpr {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  ScalarExpr() = default;
  ScalarExpr(GaussianRational c);  // NOLINT(google-explicit-constructor)
  ScalarExpr(long c) : ScalarExpr(GaussianRational(c)) {}  // NOLINT
  ScalarExpr(Symbol s);  // NOLINT(google-explicit-constructor)
  ScalarExpr(const Monomial& m, GaussianRational c);

  static ScalarExpr i() { return GaussianRational::i(); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  GaussianRational constant() const;
  int degree_in(Symbol s) const;
  bool depends_on(Symbol s) const;

  ScalarExpr& operator+=(const ScalarExpr& o);
  ScalarExpr& operator-=(const ScalarExpr& o);
  ScalarExpr& operator*=(const ScalarExpr& o);
  ScalarExpr& operator*=(const GaussianRational& c);
  void add_term(const Monomial& m, const GaussianRational& c);
  /// this += a * b without a temporary.
  void add_product(const ScalarExpr& a, const ScalarExpr& b);

  friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
  friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator*(ScalarExpr a, const GaussianRational& c) { return a *= c; }
  friend ScalarExpr operator*(const GaussianRational& c, ScalarExpr a) { return a *= c; }
  ScalarExpr operator-() const;
  ScalarExpr pow(int e) const;

  friend bool operator==(const ScalarExpr&, const ScalarExpr&) = default;

  /// Partial derivative with respect to a symbol.
  ScalarExpr diff(Symbol s) const;
  /// Replace s by a value.
  ScalarExpr substitute(Symbol s, const ScalarExpr& value) const;
  ScalarExpr substitute(const std::map<Symbol, ScalarExpr>& values) const;
  /// Map every monomial through f (monomial -> replacement expression).
  ScalarExpr transform(const std::function<ScalarExpr(const Monomial&)>& f) const;
  /// Reduce modulo xi1^2 + xi2^2 + xi3^2 = 1 (rewrite xi3^2).
  ScalarExpr on_unit_sphere() const;
  /// Coefficient of s^k as an expression free of s.
  ScalarExpr coefficient(Symbol s, int k) const;

  std::complex<double> evaluate(const std::function<std::complex<double>(Symbol)>& value) const;

  std::string str() const;

 private:
  Terms terms_;
};

/// xi1^2 + xi2^2 + xi3^2.
ScalarExpr xi_prime_norm_squared();

}  // namespace ncres
