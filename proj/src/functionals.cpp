#include "ncres/functionals.hpp"

#include <functional>
#include <stdexcept>

namespace ncres {

namespace {

ScalarExpr named(const char* name) { return ScalarExpr{Alphabet::instance().at(name)}; }
ScalarExpr q(long num, long den) { return ScalarExpr{GaussianRational(num, den)}; }
ScalarExpr sgn(const sym::Signed& x) {
  if (x.sign == 0) return {};
  return ScalarExpr{Monomial{x.symbol}, GaussianRational(x.sign)};
}

long factorial(int n) {
  long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

ScalarExpr pi_pow(int m) { return ScalarExpr{Monomial{sym::pi(), m}, GaussianRational(1)}; }

ScalarExpr trace_scalar(const ScalarEnd& m) { return m.trace(); }

// sigma(e_a) = 1/4 sum_{s,t} omega_{s,t}(e_a) (chat_s chat_t - c_s c_t)
ScalarEnd sigma_part(int a) {
  ScalarEnd r;
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) {
      const ScalarExpr w = sgn(sym::omega(a, s, t));
      if (w.is_zero()) continue;
      r += (w * GaussianRational(1, 4)) * (chat(s) * chat(t) - c(s) * c(t));
    }
  }
  return r;
}

ScalarEnd sigma_derivative(int a, int b) {
  ScalarEnd r;
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) {
      const ScalarExpr w = sgn(sym::domega(a, b, s, t));
      if (w.is_zero()) continue;
      r += (w * GaussianRational(1, 4)) * (chat(s) * chat(t) - c(s) * c(t));
    }
  }
  return r;
}

ScalarEnd j_bar(int a) { return sigma_part(a) - ScalarEnd::scalar(ScalarExpr{sym::W(a)} * GaussianRational(1, 2)); }

// e_a(J(e_b)); e_a(W_b) = dW_b_a.
ScalarEnd d_j_bar(int a, int b) {
  return sigma_derivative(a, b) - ScalarEnd::scalar(ScalarExpr{sym::dW(b, a)} * GaussianRational(1, 2));
}

ScalarExpr pair_sum(const std::function<ScalarExpr(int, int)>& f) {
  ScalarExpr r;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) r += ScalarExpr{sym::U(a)} * ScalarExpr{sym::V(b)} * f(a, b);
  }
  return r;
}

// Coefficient of a slot monomial; remaining factors may only be pi.
ScalarExpr slot_coefficient(const ScalarExpr& e, const Monomial& slot) {
  ScalarExpr out;
  for (const auto& [m, c] : e.terms()) {
    if (!slot.divides(m)) continue;
    const Monomial rest = m.quotient(slot);
    bool ok = true;
    for (const auto& f : rest.factors()) ok = ok && f.symbol == sym::pi();
    if (ok) out.add_term(rest, c);
  }
  return out;
}

}  // namespace

GeometricInputs GeometricInputs::formal(int m) {
  GeometricInputs in;
  in.m = m;
  in.ric = named("Ric_UV");
  in.s = ScalarExpr{sym::scalar_curvature()};
  in.g_uv = named("gUV");
  in.g_v_nabla_u_vp = named("gV_nUVp");
  in.g_u_nabla_v_vp = named("gU_nVVp");
  in.vp2 = named("Vp2");
  return in;
}

ScalarExpr einstein_closed(const GeometricInputs& in) {
  if (in.m < 1) throw std::invalid_argument("einstein_closed: m must be at least 1");
  const long gamma = factorial(in.m - 1);
  const long tr_id = 1L << (2 * in.m);
  const ScalarExpr pim = pi_pow(in.m);
  const ScalarExpr einstein = in.ric - q(1, 2) * in.s * in.g_uv;
  const ScalarExpr conn = q(1, 2) * (in.g_v_nabla_u_vp + in.g_u_nabla_v_vp) * ScalarExpr{tr_id};
  const ScalarExpr pot = (q(1, 4) * in.s * ScalarExpr{tr_id} + q(1, 2) * in.vp2) * in.g_uv;
  return q(1L << (2 * in.m + 1), 6 * gamma) * pim * einstein - q(1, gamma) * pim * conn +
         ScalarExpr{1L << (2 * in.m - 1)} * pot;
}

ScalarExpr lemma22(int m, const ScalarExpr& G, const ScalarExpr& F, const ScalarExpr& trE_g) {
  if (m < 1) throw std::invalid_argument("lemma22: m must be at least 1");
  const ScalarExpr upsilon = q(2, factorial(m - 1)) * pi_pow(m);
  return upsilon * q(1L << (2 * m), 6) * G + upsilon * q(1, 2) * F + q(1, 2) * trE_g;
}

ScalarExpr published_closed_m2() {
  const GeometricInputs in = GeometricInputs::formal(2);
  return q(4, 3) * pi_pow(2) * (in.ric - q(1, 2) * in.s * in.g_uv) -
         pi_pow(2) * q(1, 2) * (in.g_v_nabla_u_vp + in.g_u_nabla_v_vp) * ScalarExpr{16} +
         (ScalarExpr{2} * in.s * ScalarExpr{16} + ScalarExpr{4} * in.vp2) * in.g_uv;
}

std::vector<Comparison> einstein_slot_rows() {
  const ScalarExpr engine = einstein_closed(GeometricInputs::formal(2));
  const ScalarExpr paper = published_closed_m2();
  const Alphabet& al = Alphabet::instance();
  const std::vector<std::pair<const char*, Monomial>> slots{
      {"Ric(U,V)", Monomial{al.at("Ric_UV")}},
      {"s g(U,V)", Monomial{sym::scalar_curvature()} * Monomial{al.at("gUV")}},
      {"g(V, nabla_U V')", Monomial{al.at("gV_nUVp")}},
      {"g(U, nabla_V V')", Monomial{al.at("gU_nVVp")}},
      {"|V'|^2 g(U,V)", Monomial{al.at("Vp2")} * Monomial{al.at("gUV")}},
  };
  std::vector<Comparison> rows;
  for (const auto& [name, slot] : slots) {
    const ScalarExpr ce = slot_coefficient(engine, slot);
    const ScalarExpr cp = slot_coefficient(paper, slot);
    std::string note;
    if (std::string(name) == "Ric(U,V)") {
      note = "flagged: general-m formula at m = 2 gives 2^5 pi^2 / 6 = 16 pi^2 / 3; the four-dimensional statement gives 4 pi^2 / 3";
    }
    rows.push_back(compare_exprs(std::string("closed m=2 slot ") + name, ce, cp, note));
  }
  rows.push_back(compare_exprs("closed m=2 full density", engine, paper));
  return rows;
}

Comparison trace_E() {
  ScalarEnd curvature;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      for (int k = 1; k <= 4; ++k) {
        for (int l = 1; l <= 4; ++l) {
          const ScalarExpr r = sgn(sym::riemann(i, j, k, l));
          if (r.is_zero()) continue;
          curvature += (r * GaussianRational(1, 8)) * (chat(i) * chat(j) * c(k) * c(l));
        }
      }
    }
  }
  const ScalarEnd iota = generator(Generator::iota, vprime_vector());
  ScalarEnd squares;
  ScalarEnd derivative;
  for (int i = 1; i <= 4; ++i) {
    const ScalarEnd anti = c(i) * iota + iota * c(i);
    squares += anti * anti;
    std::array<ScalarExpr, 4> dv;
    for (int a = 1; a <= 4; ++a) dv[static_cast<std::size_t>(a - 1)] = ScalarExpr{sym::dW(a, i)};
    const ScalarEnd nabla_iota = generator(Generator::iota, dv);
    derivative += nabla_iota * c(i) - c(i) * nabla_iota;
  }
  const ScalarExpr s{sym::scalar_curvature()};
  const ScalarEnd e = curvature - ScalarEnd::scalar(s * GaussianRational(1, 4)) - squares * GaussianRational(1, 4) +
                      derivative * GaussianRational(1, 2);
  ScalarExpr vp2;
  for (int a = 1; a <= 4; ++a) vp2 += ScalarExpr{sym::W(a)}.pow(2);
  const ScalarExpr paper = (q(1, 4) * s + q(1, 2) * vp2) * ScalarExpr{kFiberDim};
  return compare_exprs("Tr E", trace_scalar(e), paper, "|V'|^2 written as W1^2 + W2^2 + W3^2 + W4^2");
}

std::vector<Comparison> F_UV_rows() {
  std::vector<Comparison> rows;
  ScalarExpr sigma_products;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) sigma_products += trace_scalar(sigma_part(a) * sigma_part(b) - sigma_part(b) * sigma_part(a));
  }
  rows.push_back(compare_exprs("F(U,V): sum Tr[sigma(e_a), sigma(e_b)]", sigma_products, {}));

  const ScalarExpr engine = pair_sum([](int a, int b) {
    const ScalarEnd f = d_j_bar(a, b) - d_j_bar(b, a) + j_bar(a) * j_bar(b) - j_bar(b) * j_bar(a);
    return trace_scalar(f);
  });
  const ScalarExpr intermediate = pair_sum([](int a, int b) {
    return (ScalarExpr{sym::dW(a, b)} - ScalarExpr{sym::dW(b, a)}) * q(kFiberDim, 2);
  });
  rows.push_back(compare_exprs("F(U,V) intermediate: -1/2 e_a(g(e_b,V')) + 1/2 e_b(g(e_a,V')), normal frame", engine,
                               intermediate));
  const ScalarExpr published = pair_sum([](int a, int b) {
    return (ScalarExpr{sym::dW(b, a)} + ScalarExpr{sym::dW(a, b)}) * q(-kFiberDim, 2);
  });
  rows.push_back(compare_exprs("F(U,V) final: -1/2 [g(V, nabla_U V') + g(U, nabla_V V')] Tr[Id]", engine, published));
  return rows;
}

Comparison F_UV() { return F_UV_rows().back(); }

std::vector<Comparison> functional_report() {
  std::vector<Comparison> rows = einstein_slot_rows();
  rows.push_back(trace_E());
  for (auto& r : F_UV_rows()) rows.push_back(std::move(r));
  return rows;
}

}  // namespace ncres
