#include "bitmask_clifford.hpp"

#include <bit>
#include <cmath>

namespace oracle {

namespace {

cplx& at(Mat& m, unsigned r, unsigned c) { return m[r * 16 + c]; }

double sign_below(unsigned mask, int bit) {
  return std::popcount(mask & ((1u << bit) - 1u)) % 2 ? -1.0 : 1.0;
}

}  // namespace

Mat identity() {
  Mat m{};
  for (unsigned k = 0; k < 16; ++k) at(m, k, k) = 1.0;
  return m;
}

Mat wedge(const Vec4& v) {
  Mat m{};
  for (unsigned s = 0; s < 16; ++s) {
    for (int b = 0; b < 4; ++b) {
      if (s & (1u << b)) continue;
      at(m, s | (1u << b), s) += sign_below(s, b) * v[static_cast<std::size_t>(b)];
    }
  }
  return m;
}

Mat contract(const Vec4& v) {
  Mat m{};
  for (unsigned s = 0; s < 16; ++s) {
    for (int b = 0; b < 4; ++b) {
      if (!(s & (1u << b))) continue;
      at(m, s & ~(1u << b), s) += sign_below(s, b) * v[static_cast<std::size_t>(b)];
    }
  }
  return m;
}

Mat cliff(const Vec4& v) { return wedge(v) - contract(v); }
Mat cliff_hat(const Vec4& v) { return wedge(v) + contract(v); }

Mat operator*(const Mat& a, const Mat& b) {
  Mat r{};
  for (unsigned i = 0; i < 16; ++i) {
    for (unsigned k = 0; k < 16; ++k) {
      const cplx x = a[i * 16 + k];
      if (x == 0.0) continue;
      for (unsigned j = 0; j < 16; ++j) r[i * 16 + j] += x * b[k * 16 + j];
    }
  }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat r;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat r;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

Mat operator*(cplx s, const Mat& a) {
  Mat r;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = s * a[k];
  return r;
}

cplx trace(const Mat& a) {
  cplx t = 0;
  for (unsigned k = 0; k < 16; ++k) t += a[k * 16 + k];
  return t;
}

double max_abs(const Mat& a) {
  double m = 0;
  for (const auto& x : a) m = std::max(m, std::abs(x));
  return m;
}

Vec4 unit(int a) {
  Vec4 v{};
  v[static_cast<std::size_t>(a - 1)] = 1.0;
  return v;
}

TraceSample::TraceSample(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (auto& x : w) x = d(rng);
  double n = 0;
  for (int j = 0; j < 3; ++j) {
    const double v = d(rng);
    xp[static_cast<std::size_t>(j)] = v;
    n += v * v;
  }
  for (int j = 0; j < 3; ++j) xp[static_cast<std::size_t>(j)] /= std::sqrt(n);
  xin = d(rng);
  hp = d(rng);
  for (int i = 1; i <= 4; ++i) {
    for (int s = 1; s <= 4; ++s) {
      for (int t = s + 1; t <= 4; ++t) {
        omega[i][s][t] = d(rng);
        omega[i][t][s] = -omega[i][s][t];
      }
    }
  }
}

std::vector<cplx> TraceSample::rows(bool formal) const {
  const Mat cxp = cliff(xp);
  const Mat cn = cliff(unit(4));
  const Mat cxi = cxp + xin * cn;
  const Mat io = contract(w);
  const Mat dc = (hp / 2.0) * cxp;
  Mat a{};
  Mat b{};
  if (formal) {
    for (int i = 1; i <= 4; ++i) {
      for (int s = 1; s <= 4; ++s) {
        for (int t = 1; t <= 4; ++t) {
          a = a + (omega[i][s][t] / 4) * (cliff(unit(i)) * cliff_hat(unit(s)) * cliff_hat(unit(t)));
          b = b + (-omega[i][s][t] / 4) * (cliff(unit(i)) * cliff(unit(s)) * cliff(unit(t)));
        }
      }
    }
  }
  return {trace(cxi * a * cxi * cn),  trace(cxi * b * cxi * cn),  trace(cxi * a * cxi * cxp),
          trace(cxi * b * cxi * cxp), trace(cxp * io * cxp * cn), -trace(cn * io * cn * cn),
          trace(cxp * io * cn * cn),  -trace(cn * io * cxp * cn), trace(cxp * cn * dc * cn),
          -trace(cxp * cxp * dc * cxp)};
}

std::vector<cplx> TraceSample::published() const {
  const cplx vx = w[0] * xp[0] + w[1] * xp[1] + w[2] * xp[2];
  return {0.0, 0.0, 0.0, 0.0, 8.0 * w[3], 8.0 * w[3], -8.0 * vx, -8.0 * vx, -8.0 * hp, -8.0 * hp};
}

}  // namespace oracle
