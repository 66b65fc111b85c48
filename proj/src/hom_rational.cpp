#include "ncres/hom_rational.hpp"

#include <stdexcept>

namespace ncres {

namespace {

XiPoly norm_power_poly(int k) {
  XiPoly r{ScalarExpr{1}};
  for (int m = 0; m < k; ++m) r = r * HomRational::norm_squared();
  return r;
}

}  // namespace

HomRational::HomRational(XiPoly numerator, int norm_power) : num_(std::move(numerator)), k_(norm_power) {
  if (k_ < 0) throw std::invalid_argument("HomRational: negative norm power");
  if (num_.is_zero()) k_ = 0;
}

const XiPoly& HomRational::norm_squared() {
  static const XiPoly d{std::vector<ScalarExpr>{xi_prime_norm_squared(), ScalarExpr{}, ScalarExpr{1}}};
  return d;
}

HomRational& HomRational::operator+=(const HomRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (k_ == o.k_) {
    num_ += o.num_;
  } else if (k_ > o.k_) {
    num_ += o.num_ * norm_power_poly(k_ - o.k_);
  } else {
    num_ = num_ * norm_power_poly(o.k_ - k_) + o.num_;
    k_ = o.k_;
  }
  if (num_.is_zero()) k_ = 0;
  return *this;
}

HomRational& HomRational::operator-=(const HomRational& o) { return *this += -o; }

HomRational operator*(const HomRational& a, const HomRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return HomRational{a.num_ * b.num_, a.k_ + b.k_};
}

HomRational HomRational::operator-() const {
  HomRational r = *this;
  r.num_ = -r.num_;
  return r;
}

HomRational HomRational::scaled(const ScalarExpr& c) const { return HomRational{num_.scaled(c), k_}; }

bool HomRational::equivalent(const HomRational& o) const {
  const int k = std::max(k_, o.k_);
  return num_ * norm_power_poly(k - k_) == o.num_ * norm_power_poly(k - o.k_);
}

HomRational HomRational::diff_xin() const {
  if (k_ == 0) return HomRational{num_.derivative()};
  // (N' D - 2k xi_n N) / D^(k+1)
  XiPoly n = num_.derivative() * norm_squared() - (XiPoly::xin() * num_).scaled(ScalarExpr{2 * k_});
  return HomRational{std::move(n), k_ + 1};
}

HomRational HomRational::diff_xi(int j) const {
  const Symbol s = sym::xi(j);
  XiPoly dn = num_.map_coeffs([&](const ScalarExpr& c) { return c.diff(s); });
  if (k_ == 0) return HomRational{std::move(dn)};
  XiPoly n = dn * norm_squared() - num_.scaled(ScalarExpr{Monomial{s}, GaussianRational(2 * k_)});
  return HomRational{std::move(n), k_ + 1};
}

XiRational HomRational::at_boundary() const {
  return XiRational{num_.map_coeffs([](const ScalarExpr& c) { return c.on_unit_sphere(); }), k_, k_};
}

std::string HomRational::str() const {
  if (k_ == 0) return num_.str();
  return "(" + num_.str() + ")/|xi|^" + std::to_string(2 * k_);
}

}  // namespace ncres
