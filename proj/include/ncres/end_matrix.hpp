#pragma once

#include "ncres/scalar_expr.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace ncres {

inline constexpr int kFiberDim = 16;

/// Endomorphism of the 16-dimensional fiber with entries in a commutative ring
/// (ScalarExpr, HomRational or XiRational). Dense storage; zero entries are
/// skipped in products.
template <class Entry>
class EndMatrix {
 public:
  EndMatrix() : a_(kFiberDim * kFiberDim) {}

  static EndMatrix identity() { return scalar(Entry{1}); }
  static EndMatrix scalar(const Entry& v) {
    EndMatrix m;
    if (v.is_zero()) return m;
    for (int i = 0; i < kFiberDim; ++i) m(i, i) = v;
    return m;
  }

  Entry& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * kFiberDim + c)]; }
  const Entry& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * kFiberDim + c)]; }

  bool is_zero() const {
    for (const auto& e : a_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }
  int nonzeros() const {
    int n = 0;
    for (const auto& e : a_) n += e.is_zero() ? 0 : 1;
    return n;
  }

  EndMatrix& operator+=(const EndMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    }
    return *this;
  }
  EndMatrix& operator-=(const EndMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    }
    return *this;
  }
  friend EndMatrix operator+(EndMatrix a, const EndMatrix& b) { return a += b; }
  friend EndMatrix operator-(EndMatrix a, const EndMatrix& b) { return a -= b; }
  EndMatrix operator-() const {
    EndMatrix r;
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!a_[k].is_zero()) r.a_[k] = -a_[k];
    }
    return r;
  }

  friend EndMatrix operator*(const EndMatrix& a, const EndMatrix& b) {
    EndMatrix r;
    for (int i = 0; i < kFiberDim; ++i) {
      for (int k = 0; k < kFiberDim; ++k) {
        const Entry& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < kFiberDim; ++j) {
          const Entry& y = b(k, j);
          if (y.is_zero()) continue;
          r(i, j) += x * y;
        }
      }
    }
    return r;
  }

  /// Entrywise product with a ring element.
  friend EndMatrix operator*(const Entry& s, const EndMatrix& m) { return m.map([&](const Entry& e) { return s * e; }); }
  friend EndMatrix operator*(const EndMatrix& m, const Entry& s) { return m.map([&](const Entry& e) { return e * s; }); }

  template <class F>
  auto map(F&& f) const -> EndMatrix<std::invoke_result_t<F, const Entry&>> {
    EndMatrix<std::invoke_result_t<F, const Entry&>> r;
    for (int i = 0; i < kFiberDim; ++i) {
      for (int j = 0; j < kFiberDim; ++j) {
        if (!(*this)(i, j).is_zero()) r(i, j) = f((*this)(i, j));
      }
    }
    return r;
  }

  Entry trace() const {
    Entry t{};
    for (int i = 0; i < kFiberDim; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const EndMatrix& a, const EndMatrix& b) { return a.a_ == b.a_; }

 private:
  std::vector<Entry> a_;
};

/// tr(A B) without forming the product.
template <class Entry>
Entry trace_product(const EndMatrix<Entry>& a, const EndMatrix<Entry>& b) {
  Entry t{};
  for (int i = 0; i < kFiberDim; ++i) {
    for (int k = 0; k < kFiberDim; ++k) {
      const Entry& x = a(i, k);
      if (x.is_zero()) continue;
      const Entry& y = b(k, i);
      if (y.is_zero()) continue;
      t += x * y;
    }
  }
  return t;
}

}  // namespace ncres
