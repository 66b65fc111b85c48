#pragma once

#include "ncres/comparison.hpp"
#include "ncres/end_matrix.hpp"
#include "ncres/xi_rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace ncres {

using ScalarEnd = EndMatrix<ScalarExpr>;
using CliffordEnd = EndMatrix<XiRational>;

/// Basis of the exterior algebra of R^4: subsets of {1,2,3,4} as bit masks
/// (bit a-1 set when a is in the subset), in lexicographic order of the sorted
/// index tuples. The order never changes.
const std::array<unsigned, kFiberDim>& fiber_basis();
std::string basis_label(int k);

enum class Generator { c, chat, iota, eps };

/// Generator acting by the basis covector e_a, a in 1..4.
const ScalarEnd& generator(Generator kind, int a);
/// Linear extension sum_a v_a * generator(kind, e_a).
ScalarEnd generator(Generator kind, const std::array<ScalarExpr, 4>& v);

inline ScalarEnd c(int a) { return generator(Generator::c, a); }
inline ScalarEnd chat(int a) { return generator(Generator::chat, a); }

/// Component vectors of the covectors the engine uses at the boundary point.
std::array<ScalarExpr, 4> xi_prime_vector();  // (xi1, xi2, xi3, 0)
std::array<ScalarExpr, 4> vprime_vector();    // (W1, ..., W4)
std::array<ScalarExpr, 4> basis_vector(int a);

template <class To>
EndMatrix<To> lift(const ScalarEnd& m) {
  return m.map([](const ScalarExpr& e) { return To{e}; });
}

/// Fiberwise trace.
inline XiRational trace(const CliffordEnd& a) { return a.trace(); }

/// Expansion in the trace-orthogonal basis c(e_I) chat(e_J), I and J increasing
/// index sets. Labels look like "c1c4", "chat2chat3", "Id".
struct CliffordTerm {
  std::string label;
  XiRational coefficient;
};
std::vector<CliffordTerm> clifford_expand(const CliffordEnd& m);
std::string render(const CliffordEnd& m);
Comparison compare_ends(std::string ref, const CliffordEnd& engine, const CliffordEnd& paper, std::string note = {});

/// Whether the connection-form matrices A(x0), B(x0) are built from formal
/// omega symbols or vanish as in the boundary normal form.
enum class OmegaModel { normal_form, formal };

/// Recomputes the five boundary trace identities used for the case-b
/// computation of the second pairing (|xi'| = 1 enforced on both sides).
std::vector<Comparison> verify_trace_block(OmegaModel model = OmegaModel::normal_form);

}  // namespace ncres
