#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace ncres {

using Rational = mpq_class;

/// Exact element of Q(i). Both parts are kept canonical by GMP.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);
  GaussianRational(long num, long den, long im_num = 0, long im_den = 1);

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Integer power; negative exponents invert.
  GaussianRational pow(int e) const;

  /// Canonical rendering: `3/2`, `-1/4*i`, `(1/2-3*i)`.
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses `a`, `a/b`, `bi`, `a+bi`, `(a/b-c/d*i)` forms. Throws std::invalid_argument.
GaussianRational parse_gaussian(const std::string& text);

}  // namespace ncres
