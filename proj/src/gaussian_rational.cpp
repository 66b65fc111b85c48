#include "ncres/gaussian_rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncres {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational::GaussianRational(long num, long den, long im_num, long im_den)
    : re_(num, den), im_(im_num, im_den) {
  if (den == 0 || im_den == 0) throw std::domain_error("zero denominator");
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  Rational n = re_ * re_ + im_ * im_;
  if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

GaussianRational GaussianRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result{1};
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string GaussianRational::str() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_re && !has_im) return "0";
  if (!has_im) return re_.get_str();
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = im_.get_str() + "*i";
  }
  if (!has_re) return im_part;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  out += im_part + ")";
  return out;
}

namespace {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+')) {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }
  std::string t = s;
  if (t.front() == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (t.find('/') != std::string::npos && sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

// Coefficient of an imaginary term such as "i", "-i", "3/2*i", "3/2i".
Rational parse_imag(std::string s) {
  s.pop_back();  // trailing 'i'
  if (!s.empty() && s.back() == '*') s.pop_back();
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_rational(s);
}

}  // namespace

GaussianRational parse_gaussian(const std::string& text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.back() != 'i') return {parse_rational(s), 0};
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0, parse_imag(s)};
  return {parse_rational(s.substr(0, split)), parse_imag(s.substr(split))};
}

}  // namespace ncres
