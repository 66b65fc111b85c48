#pragma once

#include "ncres/comparison.hpp"
#include "ncres/decomposition.hpp"
#include "ncres/symbol.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ncres {

class DecayError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Principal part at xi_n = +i. The polynomial part belongs to pi^-.
XiRational pi_plus(const XiRational& f);
XiRational pi_minus(const XiRational& f);
CliffordEnd pi_plus(const CliffordEnd& m);

/// Integral over the real line: 2 pi i * Res_{xi_n = i}, pi kept as a symbol.
/// Requires numerator degree <= p + q - 2.
ScalarExpr integrate_xi_n(const XiRational& f);

/// Integral over the unit sphere in xi' = (xi1, xi2, xi3); Omega is its area.
ScalarExpr sphere_integrate(const ScalarExpr& p);

/// One term of the boundary sum: r + l - k - j - |alpha| = -3.
struct CaseSpec {
  std::string label;
  int r = 0;
  int l = 0;
  int k = 0;
  int j = 0;
  int alpha_order = 0;  // summed over all xi' multi-indices of this order
};

std::vector<CaseSpec> enumerate_cases(int top1, int top2, int floor1, int floor2);

/// Density coefficient of dx' for one case.
ScalarExpr phi_case(const CaseSpec& spec, const GradedSymbol& left, const GradedSymbol& right);

enum class Pairing { A, B };
const char* to_string(Pairing p);

/// Left and right factors: A = (grad_U grad_V T^-2, T^-2), B = (grad_U grad_V T^-1, T^-3).
GradedSymbol left_factor(Pairing p);
const GradedSymbol& right_factor(Pairing p);

struct PhiCase {
  CaseSpec spec;
  ScalarExpr engine;
  ScalarExpr paper;
  std::vector<Comparison> components;
};

struct PhiReport {
  Pairing pairing = Pairing::A;
  std::vector<PhiCase> cases;
  ScalarExpr total;
  ScalarExpr paper_total;
  std::vector<Comparison> total_components;
  /// Boundary-evaluated intermediate quantities against their published forms.
  std::vector<Comparison> intermediates;
  bool total_is_sum = true;
};

/// Cases run on `threads` workers (0: NCRES_THREADS or hardware concurrency);
/// the result does not depend on the count.
PhiReport phi_total(Pairing p, unsigned threads = 0);

/// Boundary-evaluated intermediate symbols against their published forms, plus
/// the published case sum against the published total.
std::vector<Comparison> intermediate_comparisons(Pairing p);

/// Published per-case densities and totals, in the engine's symbols.
ScalarExpr paper_phi_case(Pairing p, const std::string& label);
ScalarExpr paper_phi_total(Pairing p);

unsigned configured_threads();

}  // namespace ncres
