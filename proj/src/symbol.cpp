#include "ncres/symbol.hpp"

#include <algorithm>
#include <mutex>

namespace ncres {

namespace {

const ScalarExpr kI = ScalarExpr::i();

SymMatrix lift_sym(const ScalarEnd& m) { return lift<HomRational>(m); }

SymMatrix scalar_matrix(const HomRational& v) { return SymMatrix::scalar(v); }

std::optional<SymMatrix> add_slots(const std::optional<SymMatrix>& a, const std::optional<SymMatrix>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// d(a b) contribution da * b, untracked only when it could be nonzero.
std::optional<SymMatrix> slot_times(const std::optional<SymMatrix>& da, const SymMatrix& b) {
  if (b.is_zero()) return SymMatrix{};
  if (!da) return std::nullopt;
  return *da * b;
}

std::optional<SymMatrix> times_slot(const SymMatrix& a, const std::optional<SymMatrix>& db) {
  if (a.is_zero()) return SymMatrix{};
  if (!db) return std::nullopt;
  return a * *db;
}

// sum_j coeff_j * xi_j with xi_4 = xi_n.
XiPoly covector_pairing(const std::array<ScalarExpr, 4>& coeff) {
  ScalarExpr tangential;
  for (int j = 1; j <= 3; ++j) tangential += coeff[static_cast<std::size_t>(j - 1)] * ScalarExpr{sym::xi(j)};
  return XiPoly{std::vector<ScalarExpr>{tangential, coeff[3]}};
}

std::array<ScalarExpr, 4> symbols_of(Symbol (*f)(int)) {
  return {ScalarExpr{f(1)}, ScalarExpr{f(2)}, ScalarExpr{f(3)}, ScalarExpr{f(4)}};
}

std::array<ScalarExpr, 4> derivative_row(Symbol (*f)(int, int), int dir) {
  std::array<ScalarExpr, 4> r;
  for (int a = 1; a <= 4; ++a) r[static_cast<std::size_t>(a - 1)] = ScalarExpr{f(a, dir + 1)};
  return r;
}

Jet scalar_poly_jet(const XiPoly& value, const std::array<XiPoly, 4>& slots) {
  std::array<std::optional<SymMatrix>, 4> d;
  for (int k = 0; k < 4; ++k) d[static_cast<std::size_t>(k)] = scalar_matrix(HomRational{slots[static_cast<std::size_t>(k)]});
  return Jet{scalar_matrix(HomRational{value}), d};
}

ScalarExpr half(const ScalarExpr& e) { return e * GaussianRational(1, 2, 0, 1); }

ScalarExpr rho_squared() { return xi_prime_norm_squared(); }

GradedSymbol build_T() {
  GradedSymbol g{"T", 1, 0};
  g.set(1, primitive::c_xi().scaled(kI));
  g.set(0, primitive::iota_vprime().untrack());
  return g;
}

GradedSymbol build_Tsq() {
  GradedSymbol g{"Tsq", 2, 1};
  const Jet c = primitive::c_xi();
  const Jet io = primitive::iota_vprime();
  g.set(2, primitive::norm_squared());
  g.set(1, (c * io + io * c).scaled(kI).untrack());
  return g;
}

GradedSymbol build_Tinv() {
  GradedSymbol g{"Tinv", -1, -2};
  const Jet c = primitive::c_xi();
  const Jet cn = primitive::c_normal();
  const Jet cp = primitive::c_xi_prime();
  const Jet io = primitive::iota_vprime();
  g.set(-1, (c * primitive::inverse_norm(1)).scaled(kI));
  const SymMatrix hp_rho = scalar_matrix(HomRational{XiPoly{ScalarExpr{sym::hp()} * rho_squared()}});
  const SymMatrix dn_cp = cp.value() * scalar_matrix(HomRational{XiPoly{half(ScalarExpr{sym::hp()})}});
  const SymMatrix inner = dn_cp * primitive::norm_squared().value() - c.value() * hp_rho;
  SymMatrix s = c.value() * io.value() * c.value() * primitive::inverse_norm(2).value() +
                c.value() * cn.value() * inner * primitive::inverse_norm(3).value();
  g.set(-2, Jet::untracked(std::move(s)));
  return g;
}

GradedSymbol build_Tinv2() {
  GradedSymbol g{"Tinv2", -2, -3};
  const Jet c = primitive::c_xi();
  const Jet io = primitive::iota_vprime();
  g.set(-2, primitive::inverse_norm(1));
  const SymMatrix anti = (c.value() * io.value() + io.value() * c.value()) * primitive::inverse_norm(2).value();
  const ScalarExpr coeff = ScalarExpr{sym::hp()} * rho_squared() * ScalarExpr{GaussianRational(0, 1, -2, 1)};
  const SymMatrix tail = scalar_matrix(HomRational{XiPoly{std::vector<ScalarExpr>{ScalarExpr{}, coeff}}, 3});
  g.set(-3, Jet::untracked(anti.map([](const HomRational& e) { return e.scaled(-kI); }) + tail));
  return g;
}

GradedSymbol build_Tinv3() {
  GradedSymbol g{"Tinv3", -3, -4};
  g.set(-3, (primitive::c_xi() * primitive::inverse_norm(2)).scaled(kI));
  const GradedSymbol prod = compose(catalog("Tinv2"), catalog("Tinv"), -4);
  g.set(-4, Jet::untracked(prod.order(-4)));
  return g;
}

GradedSymbol build_T3() {
  GradedSymbol prod = compose(catalog("T"), catalog("Tsq"), 2);
  GradedSymbol g{"T3", 3, 2};
  for (int r : prod.orders()) g.set(r, prod.jet(r));
  return g;
}

GradedSymbol build_gradUgradV() {
  GradedSymbol g{"gradUgradV", 2, 1};
  const auto u = symbols_of(&sym::U);
  const auto v = symbols_of(&sym::V);
  const XiPoly ux = covector_pairing(u);
  const XiPoly vx = covector_pairing(v);
  std::array<XiPoly, 4> slots;
  for (int k = 0; k < 4; ++k) {
    const XiPoly dux = covector_pairing(derivative_row(&sym::dU, k));
    const XiPoly dvx = covector_pairing(derivative_row(&sym::dV, k));
    slots[static_cast<std::size_t>(k)] = -(dux * vx + ux * dvx);
  }
  g.set(2, scalar_poly_jet(-(ux * vx), slots));

  // i sum_{j,l} U_j d_j V_l xi_l + i B(V) <U,xi> + i B(U) <V,xi>, B(X) = 1/2 <V',X>.
  std::array<ScalarExpr, 4> udv;
  for (int l = 1; l <= 4; ++l) {
    ScalarExpr t;
    for (int j = 1; j <= 4; ++j) t += ScalarExpr{sym::U(j)} * ScalarExpr{sym::dV(l, j)};
    udv[static_cast<std::size_t>(l - 1)] = t;
  }
  ScalarExpr bu;
  ScalarExpr bv;
  for (int a = 1; a <= 4; ++a) {
    bu += half(ScalarExpr{sym::W(a)} * ScalarExpr{sym::U(a)});
    bv += half(ScalarExpr{sym::W(a)} * ScalarExpr{sym::V(a)});
  }
  const XiPoly s1 = (covector_pairing(udv) + ux.scaled(bv) + vx.scaled(bu)).scaled(kI);
  g.set(1, Jet::untracked(scalar_matrix(HomRational{s1})));
  return g;
}

}  // namespace

Jet Jet::untracked(SymMatrix value) {
  Jet j{std::move(value)};
  return j.untrack();
}

const SymMatrix& Jet::slot(int dir) const {
  const auto& s = d_.at(static_cast<std::size_t>(dir));
  if (!s) throw JetOverflow("x-derivative in direction " + std::to_string(dir + 1) + " is not tracked");
  return *s;
}

Jet& Jet::untrack() {
  for (auto& s : d_) s.reset();
  return *this;
}

Jet& Jet::untrack(int dir) {
  d_.at(static_cast<std::size_t>(dir)).reset();
  return *this;
}

Jet& Jet::operator+=(const Jet& o) {
  v_ += o.v_;
  for (std::size_t k = 0; k < 4; ++k) d_[k] = add_slots(d_[k], o.d_[k]);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) { return *this += -o; }

Jet Jet::operator-() const {
  Jet r{-v_};
  for (std::size_t k = 0; k < 4; ++k) r.d_[k] = d_[k] ? std::optional<SymMatrix>{-*d_[k]} : std::nullopt;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r{a.v_ * b.v_};
  for (std::size_t k = 0; k < 4; ++k) r.d_[k] = add_slots(slot_times(a.d_[k], b.v_), times_slot(a.v_, b.d_[k]));
  return r;
}

Jet Jet::scaled(const ScalarExpr& c) const {
  return map_linear([&](const HomRational& e) { return e.scaled(c); });
}

Jet Jet::map_linear(const std::function<HomRational(const HomRational&)>& f) const {
  Jet r{v_.map(f)};
  for (std::size_t k = 0; k < 4; ++k) r.d_[k] = d_[k] ? std::optional<SymMatrix>{d_[k]->map(f)} : std::nullopt;
  return r;
}

Jet Jet::diff_xi(int dir) const {
  return map_linear([dir](const HomRational& e) { return e.diff_covector(dir + 1); });
}

void GradedSymbol::set(int order, Jet component) {
  if (order > top_ || order < floor_) throw std::out_of_range("GradedSymbol::set: order outside [floor, top]");
  components_[order] = std::move(component);
}

const Jet& GradedSymbol::jet(int order) const {
  static const Jet zero;
  if (order < floor_) {
    throw std::out_of_range(name_ + ": order " + std::to_string(order) + " is below the truncation floor");
  }
  auto it = components_.find(order);
  return it == components_.end() ? zero : it->second;
}

std::vector<int> GradedSymbol::orders() const {
  std::vector<int> r;
  for (const auto& [k, v] : components_) r.push_back(k);
  std::reverse(r.begin(), r.end());
  return r;
}

GradedSymbol identity_symbol() {
  GradedSymbol g{"Id", 0, -1000};
  g.set(0, Jet{SymMatrix::identity()});
  return g;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"T", "Tsq", "Tinv", "Tinv2", "Tinv3", "T3", "gradUgradV"};
  return names;
}

const GradedSymbol& catalog(const std::string& name) {
  static std::recursive_mutex mu;
  static std::map<std::string, GradedSymbol> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  GradedSymbol g;
  if (name == "T") g = build_T();
  else if (name == "Tsq") g = build_Tsq();
  else if (name == "Tinv") g = build_Tinv();
  else if (name == "Tinv2") g = build_Tinv2();
  else if (name == "Tinv3") g = build_Tinv3();
  else if (name == "T3") g = build_T3();
  else if (name == "gradUgradV") g = build_gradUgradV();
  else throw std::invalid_argument("unknown catalog symbol: " + name);
  return cache.emplace(name, std::move(g)).first->second;
}

GradedSymbol compose(const GradedSymbol& q1, const GradedSymbol& q2) {
  return compose(q1, q2, std::max(q1.floor() + q2.top(), q1.top() + q2.floor()));
}

GradedSymbol compose(const GradedSymbol& q1, const GradedSymbol& q2, int floor) {
  const int valid = std::max(q1.floor() + q2.top(), q1.top() + q2.floor());
  if (floor < valid) {
    throw std::invalid_argument("compose(" + q1.name() + ", " + q2.name() + "): floor " + std::to_string(floor) +
                                " below the valid floor " + std::to_string(valid));
  }
  const int top = q1.top() + q2.top();
  GradedSymbol out{q1.name() + "*" + q2.name(), top, floor};
  std::map<int, Jet> acc;
  auto add = [&](int r, const Jet& term) {
    auto it = acc.find(r);
    if (it == acc.end()) acc.emplace(r, term);
    else it->second += term;
  };
  for (int r1 : q1.orders()) {
    for (int r2 : q2.orders()) {
      const Jet& a = q1.jet(r1);
      const Jet& b = q2.jet(r2);
      if (r1 + r2 >= floor) add(r1 + r2, a * b);
      if (r1 + r2 - 1 >= floor) {
        for (int d = 0; d < 4; ++d) {
          const Jet da = a.diff_xi(d);
          if (da.value().is_zero()) continue;
          add(r1 + r2 - 1, da * Jet::untracked(b.slot(d).map([](const HomRational& e) { return e.scaled(-kI); })));
        }
      }
      if (r1 + r2 - 2 >= floor) {
        for (int d1 = 0; d1 < 4; ++d1) {
          const Jet da = a.diff_xi(d1);
          for (int d2 = d1; d2 < 4; ++d2) {
            if (!da.diff_xi(d2).value().is_zero()) {
              throw JetOverflow("compose(" + q1.name() + ", " + q2.name() + "): second x-derivative of order " +
                                std::to_string(r2) + " component required");
            }
          }
        }
      }
    }
  }
  for (auto& [r, j] : acc) {
    if (!j.value().is_zero() || r == top) out.set(r, std::move(j));
  }
  return out;
}

CliffordEnd at_boundary(const SymMatrix& m) {
  return m.map([](const HomRational& e) { return e.at_boundary(); });
}

std::map<int, CliffordEnd> boundary_evaluate(const GradedSymbol& q) {
  std::map<int, CliffordEnd> out;
  for (int r : q.orders()) out.emplace(r, at_boundary(q.order(r)));
  return out;
}

namespace primitive {

Jet c_xi_prime() {
  const SymMatrix v = lift_sym(generator(Generator::c, xi_prime_vector()));
  std::array<std::optional<SymMatrix>, 4> d{SymMatrix{}, SymMatrix{}, SymMatrix{}, SymMatrix{}};
  d[kNormal] = v * scalar_matrix(HomRational{half(ScalarExpr{sym::hp()})});
  return Jet{v, d};
}

Jet c_normal() { return Jet{lift_sym(c(4))}; }

Jet c_xi() {
  Jet cp = c_xi_prime();
  Jet cn = c_normal();
  return cp + Jet{scalar_matrix(HomRational::xin())} * cn;
}

Jet inverse_norm(int k) {
  std::array<std::optional<SymMatrix>, 4> d{SymMatrix{}, SymMatrix{}, SymMatrix{}, SymMatrix{}};
  const ScalarExpr coeff = ScalarExpr{sym::hp()} * rho_squared() * ScalarExpr{-k};
  d[kNormal] = scalar_matrix(HomRational{XiPoly{coeff}, k + 1});
  return Jet{scalar_matrix(HomRational::inverse_norm_power(k)), d};
}

Jet norm_squared() {
  std::array<std::optional<SymMatrix>, 4> d{SymMatrix{}, SymMatrix{}, SymMatrix{}, SymMatrix{}};
  d[kNormal] = scalar_matrix(HomRational{XiPoly{ScalarExpr{sym::hp()} * rho_squared()}});
  return Jet{scalar_matrix(HomRational{HomRational::norm_squared()}), d};
}

Jet iota_vprime() {
  std::array<std::optional<SymMatrix>, 4> d;
  for (int k = 0; k < 4; ++k) d[static_cast<std::size_t>(k)] = lift_sym(generator(Generator::iota, derivative_row(&sym::dW, k)));
  return Jet{lift_sym(generator(Generator::iota, vprime_vector())), d};
}

Jet scalar(const ScalarExpr& v, const std::array<ScalarExpr, 4>& dx) {
  std::array<std::optional<SymMatrix>, 4> d;
  for (int k = 0; k < 4; ++k) d[static_cast<std::size_t>(k)] = scalar_matrix(HomRational{dx[static_cast<std::size_t>(k)]});
  return Jet{scalar_matrix(HomRational{v}), d};
}

Jet h_prime() {
  Jet j = scalar(ScalarExpr{sym::hp()}, {});
  return j.untrack(kNormal);
}

}  // namespace primitive

}  // namespace ncres
