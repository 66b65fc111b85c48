#include "ncres/decomposition.hpp"

#include <functional>

namespace ncres {

namespace {

ScalarExpr s(Symbol x) { return ScalarExpr{x}; }

bool is_coefficient_symbol(Symbol x) {
  return x == sym::hp() || x == sym::W(4) || x == sym::pi() || x == sym::Omega();
}

struct BasisElement {
  const char* name;
  std::function<ScalarExpr()> expr;
  Monomial witness;
};

const std::vector<BasisElement>& elements() {
  static const std::vector<BasisElement> e{
      {"g(U,V')V_n", basis::g_u_vprime_vn, Monomial{sym::U(1)} * Monomial{sym::W(1)} * Monomial{sym::V(4)}},
      {"g(V,V')U_n", basis::g_v_vprime_un, Monomial{sym::V(1)} * Monomial{sym::W(1)} * Monomial{sym::U(4)}},
      {"g(U^T,V^T)", basis::g_tangential, Monomial{sym::U(1)} * Monomial{sym::V(1)}},
      {"U_nV_n", basis::un_vn, Monomial{sym::U(4)} * Monomial{sym::V(4)}},
      {"U_n dV_n/dx_n", basis::un_dn_vn, Monomial{sym::U(4)} * Monomial{sym::dV(4, 4)}},
  };
  return e;
}

// Terms m of e with m = witness * q, q built from coefficient symbols only.
ScalarExpr coefficient_of(const ScalarExpr& e, const Monomial& witness) {
  ScalarExpr out;
  for (const auto& [m, c] : e.terms()) {
    if (!witness.divides(m)) continue;
    const Monomial q = m.quotient(witness);
    bool ok = true;
    for (const auto& f : q.factors()) ok = ok && is_coefficient_symbol(f.symbol);
    if (ok) out.add_term(q, c);
  }
  return out;
}

}  // namespace

namespace basis {

ScalarExpr g_tangential() {
  ScalarExpr r;
  for (int a = 1; a <= 3; ++a) r += s(sym::U(a)) * s(sym::V(a));
  return r;
}

ScalarExpr un_vn() { return s(sym::U(4)) * s(sym::V(4)); }

ScalarExpr un_dn_vn() { return s(sym::U(4)) * s(sym::dV(4, 4)); }

ScalarExpr g_u_vprime_vn() {
  ScalarExpr r;
  for (int a = 1; a <= 4; ++a) r += s(sym::U(a)) * s(sym::W(a));
  return r * s(sym::V(4));
}

ScalarExpr g_v_vprime_un() {
  ScalarExpr r;
  for (int a = 1; a <= 4; ++a) r += s(sym::V(a)) * s(sym::W(a));
  return r * s(sym::U(4));
}

}  // namespace basis

Decomposition decompose(const ScalarExpr& e) {
  Decomposition d;
  ScalarExpr rest = e;
  for (const auto& b : elements()) {
    const ScalarExpr c = coefficient_of(rest, b.witness);
    d.components.push_back({b.name, c});
    if (!c.is_zero()) rest -= c * b.expr();
  }
  d.residual = rest;
  return d;
}

ScalarExpr recombine(const Decomposition& d) {
  ScalarExpr r = d.residual;
  for (std::size_t k = 0; k < d.components.size(); ++k) r += d.components[k].coefficient * elements()[k].expr();
  return r;
}

std::vector<Comparison> compare_decomposed(const std::string& ref, const ScalarExpr& engine, const ScalarExpr& paper) {
  const Decomposition de = decompose(apply_substitution(engine));
  const Decomposition dp = decompose(apply_substitution(paper));
  std::vector<Comparison> rows;
  for (std::size_t k = 0; k < de.components.size(); ++k) {
    rows.push_back(compare_exprs(ref + " [" + de.components[k].name + "]", de.components[k].coefficient,
                                 dp.components[k].coefficient));
  }
  rows.push_back(compare_exprs(ref + " [residual]", de.residual, dp.residual));
  return rows;
}

}  // namespace ncres
