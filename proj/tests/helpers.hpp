#pragma once

#include "ncres/alphabet.hpp"
#include "ncres/xi_rational.hpp"

#include <complex>
#include <random>
#include <vector>

namespace testing {

inline ncres::GaussianRational random_gaussian(std::mt19937& gen) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return ncres::GaussianRational(num(gen), den(gen), num(gen), den(gen));
}

/// Small random polynomial in xi1, xi2, hp, W4.
inline ncres::ScalarExpr random_scalar(std::mt19937& gen, int terms = 3) {
  using namespace ncres;
  const std::vector<Symbol> pool{sym::xi(1), sym::xi(2), sym::hp(), sym::W(4)};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> deg(0, 2);
  ScalarExpr out;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int f = deg(gen); f > 0; --f) m = m * Monomial{pool[static_cast<std::size_t>(pick(gen))]};
    out.add_term(m, random_gaussian(gen));
  }
  return out;
}

inline ncres::XiRational random_xi_rational(std::mt19937& gen) {
  std::uniform_int_distribution<int> pq(0, 3);
  std::uniform_int_distribution<int> deg(0, 5);
  std::vector<ncres::ScalarExpr> coeffs;
  for (int k = deg(gen); k >= 0; --k) coeffs.push_back(random_scalar(gen, 2));
  return ncres::XiRational{ncres::XiPoly{coeffs}, pq(gen), pq(gen)};
}

/// Values for every alphabet symbol, indexed by id.
inline std::vector<std::complex<double>> random_point(std::mt19937& gen) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<std::complex<double>> v(ncres::Alphabet::instance().size());
  for (auto& x : v) x = {d(gen), d(gen)};
  return v;
}

inline auto valuation(const std::vector<std::complex<double>>& v) {
  return [&v](ncres::Symbol s) { return v[s.id]; };
}

}  // namespace testing
