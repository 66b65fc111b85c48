#pragma once

#include "ncres/comparison.hpp"
#include "ncres/scalar_expr.hpp"

#include <string>
#include <vector>

namespace ncres {

/// Vector-field expressions the boundary densities are reported in.
namespace basis {
ScalarExpr g_tangential();   // g(U^T, V^T) = U1 V1 + U2 V2 + U3 V3
ScalarExpr un_vn();          // U_n V_n
ScalarExpr un_dn_vn();       // U_n d V_n / d x_n
ScalarExpr g_u_vprime_vn();  // g(U, V') V_n
ScalarExpr g_v_vprime_un();  // g(V, V') U_n
}  // namespace basis

struct Decomposition {
  struct Component {
    std::string name;
    ScalarExpr coefficient;  // polynomial in hp, W4, pi, Omega
  };
  std::vector<Component> components;
  ScalarExpr residual;
};

/// Greedy decomposition: each basis element is identified by a witness monomial,
/// in a fixed order; anything left over is the residual, reported verbatim.
Decomposition decompose(const ScalarExpr& e);
ScalarExpr recombine(const Decomposition& d);

/// Component-wise comparison, one row per basis element plus the residual.
std::vector<Comparison> compare_decomposed(const std::string& ref, const ScalarExpr& engine, const ScalarExpr& paper);

}  // namespace ncres
