#include "ncres/clifford.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ncres {

namespace {

std::array<unsigned, kFiberDim> build_basis() {
  std::vector<std::vector<int>> tuples;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<int> t;
    for (int a = 1; a <= 4; ++a) {
      if (mask & (1u << (a - 1))) t.push_back(a);
    }
    tuples.push_back(std::move(t));
  }
  std::sort(tuples.begin(), tuples.end());
  std::array<unsigned, kFiberDim> out{};
  for (int k = 0; k < kFiberDim; ++k) {
    unsigned mask = 0;
    for (int a : tuples[static_cast<std::size_t>(k)]) mask |= 1u << (a - 1);
    out[static_cast<std::size_t>(k)] = mask;
  }
  return out;
}

int index_of(unsigned mask) {
  const auto& b = fiber_basis();
  for (int k = 0; k < kFiberDim; ++k) {
    if (b[static_cast<std::size_t>(k)] == mask) return k;
  }
  throw std::logic_error("fiber basis: unknown mask");
}

int koszul_sign(unsigned mask, int a) {
  const unsigned below = mask & ((1u << (a - 1)) - 1u);
  return (std::popcount(below) % 2) ? -1 : 1;
}

ScalarEnd exterior(int a) {
  ScalarEnd m;
  const unsigned bit = 1u << (a - 1);
  for (int k = 0; k < kFiberDim; ++k) {
    const unsigned s = fiber_basis()[static_cast<std::size_t>(k)];
    if (s & bit) continue;
    m(index_of(s | bit), k) = ScalarExpr{koszul_sign(s, a)};
  }
  return m;
}

ScalarEnd interior(int a) {
  ScalarEnd m;
  const unsigned bit = 1u << (a - 1);
  for (int k = 0; k < kFiberDim; ++k) {
    const unsigned s = fiber_basis()[static_cast<std::size_t>(k)];
    if (!(s & bit)) continue;
    m(index_of(s & ~bit), k) = ScalarExpr{koszul_sign(s, a)};
  }
  return m;
}

struct GeneratorTable {
  std::array<std::array<ScalarEnd, 4>, 4> g;
  GeneratorTable() {
    for (int a = 1; a <= 4; ++a) {
      const ScalarEnd e = exterior(a);
      const ScalarEnd i = interior(a);
      g[0][static_cast<std::size_t>(a - 1)] = e - i;
      g[1][static_cast<std::size_t>(a - 1)] = e + i;
      g[2][static_cast<std::size_t>(a - 1)] = i;
      g[3][static_cast<std::size_t>(a - 1)] = e;
    }
  }
};

ScalarExpr signed_expr(const sym::Signed& s) {
  if (s.sign == 0) return {};
  return ScalarExpr{Monomial{s.symbol}, GaussianRational(s.sign)};
}

CliffordEnd lift_xi(const ScalarEnd& m) { return lift<XiRational>(m); }

Comparison compare_traces(std::string ref, const XiRational& engine, const ScalarExpr& expected) {
  const XiRational e = engine.map_coeffs(apply_substitution).on_unit_sphere();
  const ScalarExpr p = apply_substitution(expected).on_unit_sphere();
  const XiRational diff = e - XiRational{p};
  Comparison c;
  c.target_ref = std::move(ref);
  c.engine_expr = e.str();
  c.paper_expr = p.str();
  c.verdict = diff.is_zero() ? Verdict::match : Verdict::mismatch;
  c.difference = diff.str();
  return c;
}

struct ProductBasisElement {
  std::string label;
  ScalarEnd inverse;
};

// c_I chat_J over all I, J; inverse is chat_J^-1 c_I^-1, with c_a^-1 = -c_a, chat_a^-1 = chat_a.
const std::vector<ProductBasisElement>& product_basis() {
  static const std::vector<ProductBasisElement> basis = [] {
    std::vector<ProductBasisElement> out;
    for (unsigned mi = 0; mi < 16; ++mi) {
      for (unsigned mj = 0; mj < 16; ++mj) {
        std::string label;
        ScalarEnd inv = ScalarEnd::identity();
        for (int a = 1; a <= 4; ++a) {
          if (mi & (1u << (a - 1))) {
            label += "c" + std::to_string(a);
            inv = (-c(a)) * inv;
          }
        }
        for (int a = 1; a <= 4; ++a) {
          if (mj & (1u << (a - 1))) {
            label += "chat" + std::to_string(a);
            inv = chat(a) * inv;
          }
        }
        out.push_back({label.empty() ? "Id" : label, std::move(inv)});
      }
    }
    return out;
  }();
  return basis;
}

}  // namespace

std::vector<CliffordTerm> clifford_expand(const CliffordEnd& m) {
  std::vector<CliffordTerm> out;
  const XiRational norm{ScalarExpr{GaussianRational(1, kFiberDim)}};
  for (const auto& b : product_basis()) {
    const XiRational coef = trace_product(lift_xi(b.inverse), m) * norm;
    if (!coef.is_zero()) out.push_back({b.label, coef});
  }
  return out;
}

std::string render(const CliffordEnd& m) {
  const auto terms = clifford_expand(m);
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += "[" + t.coefficient.str() + "]*" + t.label;
  }
  return out;
}

Comparison compare_ends(std::string ref, const CliffordEnd& engine, const CliffordEnd& paper, std::string note) {
  const auto prep = [](const XiRational& x) { return x.map_coeffs(apply_substitution).on_unit_sphere(); };
  const CliffordEnd e = engine.map(prep);
  const CliffordEnd p = paper.map(prep);
  const CliffordEnd diff = e - p;
  Comparison c;
  c.target_ref = std::move(ref);
  c.engine_expr = render(e);
  c.paper_expr = render(p);
  c.verdict = diff.is_zero() ? Verdict::match : Verdict::mismatch;
  c.difference = render(diff);
  c.note = std::move(note);
  return c;
}

const std::array<unsigned, kFiberDim>& fiber_basis() {
  static const auto basis = build_basis();
  return basis;
}

std::string basis_label(int k) {
  const unsigned s = fiber_basis().at(static_cast<std::size_t>(k));
  if (s == 0) return "1";
  std::string out;
  for (int a = 1; a <= 4; ++a) {
    if (!(s & (1u << (a - 1)))) continue;
    if (!out.empty()) out += "^";
    out += "e" + std::to_string(a);
  }
  return out;
}

const ScalarEnd& generator(Generator kind, int a) {
  static const GeneratorTable table;
  if (a < 1 || a > 4) throw std::out_of_range("generator index");
  return table.g[static_cast<std::size_t>(kind)][static_cast<std::size_t>(a - 1)];
}

ScalarEnd generator(Generator kind, const std::array<ScalarExpr, 4>& v) {
  ScalarEnd m;
  for (int a = 1; a <= 4; ++a) {
    const ScalarExpr& x = v[static_cast<std::size_t>(a - 1)];
    if (x.is_zero()) continue;
    m += x * generator(kind, a);
  }
  return m;
}

std::array<ScalarExpr, 4> xi_prime_vector() {
  return {ScalarExpr{sym::xi(1)}, ScalarExpr{sym::xi(2)}, ScalarExpr{sym::xi(3)}, ScalarExpr{}};
}

std::array<ScalarExpr, 4> vprime_vector() {
  return {ScalarExpr{sym::W(1)}, ScalarExpr{sym::W(2)}, ScalarExpr{sym::W(3)}, ScalarExpr{sym::W(4)}};
}

std::array<ScalarExpr, 4> basis_vector(int a) {
  std::array<ScalarExpr, 4> v{};
  v.at(static_cast<std::size_t>(a - 1)) = ScalarExpr{1};
  return v;
}

std::vector<Comparison> verify_trace_block(OmegaModel model) {
  const CliffordEnd cxp = lift_xi(generator(Generator::c, xi_prime_vector()));
  const CliffordEnd cn = lift_xi(c(4));
  const CliffordEnd cxi = cxp + XiRational::xin() * cn;
  const CliffordEnd iota = lift_xi(generator(Generator::iota, vprime_vector()));
  const CliffordEnd dcxp = XiRational{ScalarExpr{Monomial{sym::hp()}, GaussianRational(1, 2, 0, 1)}} * cxp;

  CliffordEnd a0;
  CliffordEnd b0;
  if (model == OmegaModel::formal) {
    ScalarEnd a;
    ScalarEnd b;
    for (int i = 1; i <= 4; ++i) {
      for (int s = 1; s <= 4; ++s) {
        for (int t = 1; t <= 4; ++t) {
          const ScalarExpr w = signed_expr(sym::omega(i, s, t));
          if (w.is_zero()) continue;
          a += (w * GaussianRational(1, 4, 0, 1)) * (c(i) * chat(s) * chat(t));
          b += (w * GaussianRational(-1, 4, 0, 1)) * (c(i) * c(s) * c(t));
        }
      }
    }
    a0 = lift_xi(a);
    b0 = lift_xi(b);
  }

  const ScalarExpr w4{sym::W(4)};
  ScalarExpr vxi;
  for (int j = 1; j <= 3; ++j) vxi += ScalarExpr{sym::W(j)} * ScalarExpr{sym::xi(j)};
  const ScalarExpr hp{sym::hp()};

  std::vector<Comparison> rows;
  rows.push_back(compare_traces("trace-identity-1a", trace(cxi * a0 * cxi * cn), {}));
  rows.push_back(compare_traces("trace-identity-1b", trace(cxi * b0 * cxi * cn), {}));
  rows.push_back(compare_traces("trace-identity-2a", trace(cxi * a0 * cxi * cxp), {}));
  rows.push_back(compare_traces("trace-identity-2b", trace(cxi * b0 * cxi * cxp), {}));
  rows.push_back(compare_traces("trace-identity-3a", trace(cxp * iota * cxp * cn), ScalarExpr{8} * w4));
  rows.push_back(compare_traces("trace-identity-3b", -trace(cn * iota * cn * cn), ScalarExpr{8} * w4));
  rows.push_back(compare_traces("trace-identity-4a", trace(cxp * iota * cn * cn), ScalarExpr{-8} * vxi));
  rows.push_back(compare_traces("trace-identity-4b", -trace(cn * iota * cxp * cn), ScalarExpr{-8} * vxi));
  rows.push_back(compare_traces("trace-identity-5a", trace(cxp * cn * dcxp * cn), ScalarExpr{-8} * hp));
  rows.push_back(compare_traces("trace-identity-5b", -trace(cxp * cxp * dcxp * cxp), ScalarExpr{-8} * hp));
  if (model == OmegaModel::formal) {
    for (auto& r : rows) r.target_ref += "-formal-omega";
  }
  return rows;
}

}  // namespace ncres
