#pragma once

#include "ncres/clifford.hpp"
#include "ncres/comparison.hpp"

#include <vector>

namespace ncres {

/// Formal or supplied values for the closed-manifold density.
struct GeometricInputs {
  int m = 2;  // n = 2m
  ScalarExpr ric;             // Ric(U,V)
  ScalarExpr s;               // scalar curvature
  ScalarExpr g_uv;            // g(U,V)
  ScalarExpr g_v_nabla_u_vp;  // g(V, nabla_U V')
  ScalarExpr g_u_nabla_v_vp;  // g(U, nabla_V V')
  ScalarExpr vp2;             // |V'|^2

  static GeometricInputs formal(int m = 2);
};

/// Closed-manifold Einstein density with Tr[Id] = 2^(2m). Throws for m < 1.
ScalarExpr einstein_closed(const GeometricInputs& in);

/// General Laplace-type evaluator: u/6 2^n G + u/2 F + 1/2 trE_g, u = 2 pi^m / (m-1)!.
ScalarExpr lemma22(int m, const ScalarExpr& G, const ScalarExpr& F, const ScalarExpr& trE_g);

/// The published four-dimensional closed-manifold statement in formal slots.
ScalarExpr published_closed_m2();

/// Slot-by-slot comparison of einstein_closed(m = 2) with the published
/// four-dimensional statement. The Ric slot row carries a flag note.
std::vector<Comparison> einstein_slot_rows();

/// Tr E with E built from curvature, scalar curvature, iota(V') and its
/// covariant derivative, against (1/4 s + 1/2 |V'|^2) Tr[Id].
Comparison trace_E();

/// Tr F(U,V) from J(e_a) = sigma(e_a) - 1/2 g(e_a, V') Id in a normal frame.
/// Rows: traceless sigma products, the antisymmetric intermediate form, and
/// the final published form.
std::vector<Comparison> F_UV_rows();
Comparison F_UV();

/// Everything above, in a fixed order.
std::vector<Comparison> functional_report();

}  // namespace ncres
