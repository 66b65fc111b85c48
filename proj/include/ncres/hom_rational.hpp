#pragma once

#include "ncres/xi_rational.hpp"

namespace ncres {

/// Symbol entry away from the normalization |xi'| = 1: numerator / |xi|^(2k)
/// where |xi|^2 = xi1^2 + xi2^2 + xi3^2 + xi_n^2 at the boundary point.
/// Derivatives in every xi direction are exact here; boundary evaluation maps
/// the denominator to (xi_n - i)^k (xi_n + i)^k.
class HomRational {
 public:
  HomRational() = default;
  HomRational(ScalarExpr c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  HomRational(long c) : HomRational(ScalarExpr(c)) {}  // NOLINT
  HomRational(XiPoly numerator, int norm_power = 0);

  /// c(xi)-style linear pieces: xi_n and xi_j.
  static HomRational xin() { return HomRational{XiPoly::xin()}; }
  /// |xi|^2 as a polynomial.
  static const XiPoly& norm_squared();
  /// |xi|^(-2k).
  static HomRational inverse_norm_power(int k) { return HomRational{XiPoly{ScalarExpr{1}}, k}; }

  const XiPoly& numerator() const { return num_; }
  int norm_power() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  HomRational& operator+=(const HomRational& o);
  HomRational& operator-=(const HomRational& o);
  friend HomRational operator+(HomRational a, const HomRational& b) { return a += b; }
  friend HomRational operator-(HomRational a, const HomRational& b) { return a -= b; }
  friend HomRational operator*(const HomRational& a, const HomRational& b);
  HomRational operator-() const;
  HomRational scaled(const ScalarExpr& c) const;

  /// Mathematical equality (cross-multiplied).
  bool equivalent(const HomRational& o) const;

  HomRational diff_xin() const;
  /// d/d xi_j for j in 1..3.
  HomRational diff_xi(int j) const;
  /// d/d xi_j for j in 1..4 (4 is xi_n).
  HomRational diff_covector(int j) const { return j == 4 ? diff_xin() : diff_xi(j); }

  /// x = x0, |xi'| = 1.
  XiRational at_boundary() const;

  std::string str() const;

 private:
  XiPoly num_;
  int k_ = 0;
};

}  // namespace ncres
