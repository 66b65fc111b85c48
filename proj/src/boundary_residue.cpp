#include "ncres/boundary_residue.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

namespace ncres {

namespace {

const ScalarExpr kI = ScalarExpr::i();

ScalarExpr s(Symbol x) { return ScalarExpr{x}; }
ScalarExpr q(long num, long den) { return ScalarExpr{GaussianRational(num, den)}; }
ScalarExpr g(long re_num, long re_den, long im_num, long im_den) {
  return ScalarExpr{GaussianRational(re_num, re_den, im_num, im_den)};
}

Rational double_factorial(int n) {
  Rational r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Non-decreasing direction tuples over xi' (0, 1, 2) of the given length.
std::vector<std::vector<int>> multi_indices(int order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == order) {
      out.push_back(cur);
      return;
    }
    for (int d = start; d < 3; ++d) {
      cur.push_back(d);
      rec(d);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Rational multi_factorial(const std::vector<int>& alpha) {
  Rational r = 1;
  for (int d = 0; d < 3; ++d) r *= factorial(static_cast<int>(std::count(alpha.begin(), alpha.end(), d)));
  return r;
}

SymMatrix map_entries(const SymMatrix& m, const std::function<HomRational(const HomRational&)>& f) { return m.map(f); }

std::string case_label(int s, int r, int alpha, int j, int k) {
  if (s == 1 && alpha == 1) return "a-I";
  if (s == 1 && j == 1) return "a-II";
  if (s == 1 && k == 1) return "a-III";
  if (s == 0) return r == 0 ? "b" : "c";
  return "r" + std::to_string(r) + ".a" + std::to_string(alpha) + ".j" + std::to_string(j) + ".k" + std::to_string(k);
}

void cross_check_left(Pairing p, const GradedSymbol& left) {
  const SymMatrix& top2 = catalog("gradUgradV").order(2);
  SymMatrix expected = p == Pairing::A ? top2 * catalog("Tinv2").order(-2) : top2 * catalog("Tinv").order(-1);
  const int top = p == Pairing::A ? 0 : 1;
  if (!(at_boundary(left.order(top)) - at_boundary(expected)).is_zero()) {
    throw std::logic_error(std::string("left factor of pairing ") + to_string(p) + " disagrees with its leading symbol");
  }
}

CliffordEnd lift_end(const ScalarEnd& m) { return lift<XiRational>(m); }

CliffordEnd scalar_end(const XiRational& v) { return CliffordEnd::scalar(v); }

// (1 + xi_n^2)^-k
XiRational inv_norm(int k) { return XiRational{XiPoly{ScalarExpr{1}}, k, k}; }

CliffordEnd boundary_c_xi() {
  return lift_end(generator(Generator::c, xi_prime_vector())) + XiRational::xin() * lift_end(c(4));
}

CliffordEnd diff_xin(const CliffordEnd& m) {
  return m.map([](const XiRational& e) { return e.diff_xin(); });
}

std::vector<Comparison> intermediates_a() {
  std::vector<Comparison> rows;
  const XiRational hp{s(sym::hp())};
  const XiRational xin = XiRational::xin();
  const CliffordEnd cx = boundary_c_xi();
  const CliffordEnd io = lift_end(generator(Generator::iota, vprime_vector()));

  ScalarEnd bracket = ScalarEnd::scalar(ScalarExpr{2});
  for (int t = 1; t <= 3; ++t) bracket += chat(4) * chat(t) - c(4) * c(t);
  const CliffordEnd paper43 = (XiRational{-kI} * inv_norm(2)) * (cx * io + io * cx) +
                              scalar_end(XiRational{g(0, 1, -2, 1)} * hp * xin * inv_norm(3)) -
                              (hp * XiRational{q(1, 4)} * inv_norm(2)) * lift_end(bracket);
  rows.push_back(compare_ends("pairing A: sigma_-3(T^-2) at x0, |xi'|=1", at_boundary(catalog("Tinv2").order(-3)), paper43,
                              "catalog in normal form: Gamma^k, delta^k and omega vanish at x0"));

  const CliffordEnd paper62 = scalar_end(XiRational{q(-2, 1)} * xin * inv_norm(2));
  rows.push_back(compare_ends("pairing A: d/dxi_n sigma_-2(T^-2) at x0, |xi'|=1",
                              diff_xin(at_boundary(catalog("Tinv2").order(-2))), paper62));

  const GradedSymbol left = left_factor(Pairing::A);
  const CliffordEnd engine45 = diff_xin(pi_plus(at_boundary(left.order(0))));
  ScalarExpr ab;
  ScalarExpr a_vn;
  ScalarExpr un_b;
  for (int j = 1; j <= 3; ++j) {
    a_vn += s(sym::U(j)) * s(sym::xi(j)) * s(sym::V(4));
    un_b += s(sym::U(4)) * s(sym::V(j)) * s(sym::xi(j));
    for (int l = 1; l <= 3; ++l) ab += s(sym::U(j)) * s(sym::V(l)) * s(sym::xi(j)) * s(sym::xi(l));
  }
  const XiRational dbl{XiPoly{ScalarExpr{1}}, 2, 0};
  const ScalarExpr num45 = -kI * ab - basis::un_vn() + a_vn + un_b;
  const CliffordEnd paper45 = scalar_end(XiRational{num45 * q(1, 2)} * dbl);
  rows.push_back(compare_ends("pairing A: d/dxi_n pi+ sigma_0(grad_U grad_V T^-2) at x0, |xi'|=1", engine45, paper45));

  const GradedSymbol sq = compose(catalog("Tinv"), catalog("Tinv"), -3);
  rows.push_back(compare_ends("catalog: sigma_-3(Tinv o Tinv) vs sigma_-3(T^-2), |xi'|=1", at_boundary(sq.order(-3)),
                              at_boundary(catalog("Tinv2").order(-3)), "composition sees d_n c(xi') = (h'/2) c(xi')"));
  return rows;
}

std::vector<Comparison> intermediates_b() {
  std::vector<Comparison> rows;
  const XiRational xin = XiRational::xin();
  const CliffordEnd cx = boundary_c_xi();
  const CliffordEnd cp = lift_end(generator(Generator::c, xi_prime_vector()));
  const CliffordEnd cn = lift_end(c(4));

  const CliffordEnd paper43 = (XiRational{kI} * inv_norm(2)) * cn - (XiRational{g(0, 1, 4, 1)} * xin * inv_norm(3)) * cx;
  rows.push_back(compare_ends("pairing B: d/dxi_n sigma_-3(T^-3) at x0, |xi'|=1",
                              diff_xin(at_boundary(catalog("Tinv3").order(-3))), paper43));

  const XiRational half_pole{XiPoly{q(1, 2)}, 1, 0};
  const CliffordEnd sigma = at_boundary(catalog("Tinv").order(-1));
  rows.push_back(compare_ends("pairing B: pi+ [i c(xi)/|xi|^2], |xi'|=1", pi_plus(sigma),
                              half_pole * (XiRational{kI} * cp - cn)));
  rows.push_back(compare_ends("pairing B: pi+ [xi_n i c(xi)/|xi|^2], |xi'|=1", pi_plus(xin * sigma),
                              half_pole * (-cp - XiRational{kI} * cn)));
  return rows;
}

}  // namespace

std::vector<Comparison> intermediate_comparisons(Pairing p) { return p == Pairing::A ? intermediates_a() : intermediates_b(); }

XiRational pi_plus(const XiRational& f) { return partial_fractions(f).upper_part(); }

XiRational pi_minus(const XiRational& f) { return f - pi_plus(f); }

CliffordEnd pi_plus(const CliffordEnd& m) {
  return m.map([](const XiRational& e) { return pi_plus(e); });
}

ScalarExpr integrate_xi_n(const XiRational& f) {
  if (f.is_zero()) return {};
  if (f.numerator().degree() > f.p() + f.q() - 2) {
    throw DecayError("integrate_xi_n: integrand " + f.str() + " does not decay like xi_n^-2");
  }
  const PartialFractions pf = partial_fractions(f);
  if (pf.upper.empty()) return {};
  return pf.upper[0] * g(0, 1, 2, 1) * s(sym::pi());
}

ScalarExpr sphere_integrate(const ScalarExpr& p) {
  ScalarExpr out;
  const Monomial omega{sym::Omega()};
  for (const auto& [m, c] : p.terms()) {
    int total = 0;
    bool odd = false;
    Rational num = 1;
    Monomial rest = m;
    for (int j = 1; j <= 3; ++j) {
      const int e = m.exponent(sym::xi(j));
      odd = odd || (e % 2 != 0);
      total += e;
      num *= double_factorial(e - 1);
      rest = rest.without(sym::xi(j));
    }
    if (odd) continue;
    const Rational den = double_factorial(total + 1);
    out.add_term(rest * omega, c * GaussianRational(Rational(num / den)));
  }
  return out;
}

std::vector<CaseSpec> enumerate_cases(int top1, int top2, int floor1, int floor2) {
  std::vector<CaseSpec> out;
  for (int s = top1 + top2 + 3; s >= 0; --s) {
    for (int r = top1; r >= floor1; --r) {
      const int l = s - 3 - r;
      if (l > top2 || l < floor2) continue;
      for (int alpha = s; alpha >= 0; --alpha) {
        for (int j = s - alpha; j >= 0; --j) {
          const int k = s - alpha - j;
          out.push_back({case_label(s, r, alpha, j, k), r, l, k, j, alpha});
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CaseSpec& a, const CaseSpec& b) { return a.label < b.label; });
  return out;
}

ScalarExpr phi_case(const CaseSpec& c, const GradedSymbol& left, const GradedSymbol& right) {
  if (c.j > 1) throw JetOverflow("phi_case: x_n-derivative of order " + std::to_string(c.j) + " on the left factor");
  if (c.alpha_order + c.k > 1) throw JetOverflow("phi_case: second x-derivative of the right factor");

  const Jet& lj = left.jet(c.r);
  const SymMatrix lbase = c.j == 1 ? lj.slot(kNormal) : lj.value();
  const Jet& rj = right.jet(c.l);

  ScalarExpr total;
  for (const auto& alpha : multi_indices(c.alpha_order)) {
    SymMatrix lm = lbase;
    for (int d : alpha) lm = map_entries(lm, [d](const HomRational& e) { return e.diff_xi(d + 1); });
    CliffordEnd lb = pi_plus(at_boundary(lm));
    for (int t = 0; t < c.k; ++t) lb = lb.map([](const XiRational& e) { return e.diff_xin(); });

    SymMatrix rm = rj.value();
    if (!alpha.empty()) rm = rj.slot(alpha.front());
    if (c.k == 1) rm = rj.slot(kNormal);
    for (int t = 0; t < c.j + 1; ++t) rm = map_entries(rm, [](const HomRational& e) { return e.diff_xin(); });
    const CliffordEnd rb = at_boundary(rm);

    const XiRational tr = trace_product(lb, rb).on_unit_sphere();
    const ScalarExpr density = sphere_integrate(integrate_xi_n(tr));
    const GaussianRational coef =
        GaussianRational(Rational(0), Rational(-1)).pow(c.alpha_order + c.j + c.k + 1) *
        GaussianRational(Rational(1) / (multi_factorial(alpha) * factorial(c.j + c.k + 1)));
    total += density * coef;
  }
  return total;
}

const char* to_string(Pairing p) { return p == Pairing::A ? "A" : "B"; }

GradedSymbol left_factor(Pairing p) {
  GradedSymbol l = p == Pairing::A ? compose(catalog("gradUgradV"), catalog("Tinv2"))
                                   : compose(catalog("gradUgradV"), catalog("Tinv"));
  cross_check_left(p, l);
  return l;
}

const GradedSymbol& right_factor(Pairing p) { return catalog(p == Pairing::A ? "Tinv2" : "Tinv3"); }

unsigned configured_threads() {
  if (const char* env = std::getenv("NCRES_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ScalarExpr paper_phi_case(Pairing p, const std::string& label) {
  const ScalarExpr pi = s(sym::pi());
  const ScalarExpr om = s(sym::Omega());
  const ScalarExpr hp = s(sym::hp());
  const ScalarExpr w4 = s(sym::W(4));
  const ScalarExpr gt = basis::g_tangential();
  const ScalarExpr uv = basis::un_vn();
  const ScalarExpr mixed = basis::g_u_vprime_vn() + basis::g_v_vprime_un();
  if (label == "a-I") return {};
  if (p == Pairing::A) {
    if (label == "a-II") return (q(13, 6) * pi * gt + q(13, 8) * uv) * hp * pi * om;
    if (label == "a-III") return (q(5, 3) * pi * gt + g(0, 1, 5, 4) * uv) * hp * pi * om;
    if (label == "b") {
      return (gt * (q(-4, 3) * pi * w4 + g(0, 1, 10, 3) * pi * hp) - uv * (-kI * w4 + g(2, 1, -1, 2) * hp)) * pi * om;
    }
    if (label == "c") {
      return ((q(4, 3) * pi * w4 + g(96, 12, -17, 12) * pi * hp) * gt -
              (g(0, 1, 1, 4) * w4 + (g(3, 32, 6, 32) - g(0, 1, 6, 1)) * hp) * uv) * pi * om -
             (q(2, 1) * pi * basis::un_dn_vn() + mixed) * pi * om;
    }
  } else {
    if (label == "a-II") return (q(29, 48) * pi * gt + g(149, 256, 120, 256) * uv) * hp * pi * om;
    if (label == "a-III") return (g(0, 1, 10, 3) * pi * gt + g(0, 1, 5, 4) * uv) * hp * pi * om;
    if (label == "b") {
      return ((q(110, 3) * hp + g(-16, 3, 36, 3) * w4) * pi * gt + uv * (g(2, 2, -7, 2) * w4 + g(4, 2, -13, 2) * hp) +
              q(3, 2) * mixed) * pi * om;
    }
    if (label == "c") {
      return ((g(-48, 24, -37, 24) * pi * hp + g(0, 1, -4, 3) * pi * w4) * gt +
              (g(173, 32, -51, 32) * hp + g(0, 1, -3, 2) * w4) * uv) * pi * om;
    }
  }
  throw std::invalid_argument("no published value for case " + label);
}

ScalarExpr paper_phi_total(Pairing p) {
  const ScalarExpr pi = s(sym::pi());
  const ScalarExpr om = s(sym::Omega());
  const ScalarExpr hp = s(sym::hp());
  const ScalarExpr w4 = s(sym::W(4));
  const ScalarExpr gt = basis::g_tangential();
  const ScalarExpr uv = basis::un_vn();
  const ScalarExpr mixed = basis::g_u_vprime_vn() + basis::g_v_vprime_un();
  if (p == Pairing::A) {
    return ((g(23, 32, -130, 32) + g(0, 1, 5, 4) * w4) * uv + g(142, 24, 23, 24) * pi * gt) * hp * pi * om -
           (q(2, 1) * pi * basis::un_dn_vn() + mixed) * pi * om;
  }
  return (((g(1693, 48, 43, 8) * hp + g(-16, 3, 32, 3) * w4) * pi * gt) +
          uv * (g(1, 1, -5, 1) * w4 + g(2045, 256, -51, 8) * hp) + q(3, 2) * mixed) * pi * om;
}

PhiReport phi_total(Pairing p, unsigned threads) {
  const GradedSymbol left = left_factor(p);
  const GradedSymbol& right = right_factor(p);
  PhiReport rep;
  rep.pairing = p;
  const auto cases = enumerate_cases(left.top(), right.top(), left.floor(), right.floor());
  std::vector<ScalarExpr> values(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());

  const unsigned n = std::min<unsigned>(threads == 0 ? configured_threads() : threads, static_cast<unsigned>(cases.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        values[i] = phi_case(cases[i], left, right);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ScalarExpr paper_sum;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    PhiCase pc;
    pc.spec = cases[i];
    pc.engine = values[i];
    pc.paper = paper_phi_case(p, cases[i].label);
    pc.components = compare_decomposed(std::string("pairing ") + to_string(p) + " case " + cases[i].label, pc.engine, pc.paper);
    rep.total += pc.engine;
    paper_sum += pc.paper;
    rep.cases.push_back(std::move(pc));
  }
  ScalarExpr check;
  for (const auto& c : rep.cases) check += c.engine;
  rep.total_is_sum = (check - rep.total).is_zero();
  rep.paper_total = paper_phi_total(p);
  rep.total_components = compare_decomposed(std::string("pairing ") + to_string(p) + " total", rep.total, rep.paper_total);
  rep.intermediates = intermediate_comparisons(p);
  rep.intermediates.push_back(compare_exprs(std::string("pairing ") + to_string(p) + " published case sum vs published total",
                                            paper_sum, rep.paper_total));
  return rep;
}

}  // namespace ncres
