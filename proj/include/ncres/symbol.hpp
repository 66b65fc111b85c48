#pragma once

#include "ncres/clifford.hpp"
#include "ncres/hom_rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncres {

using SymMatrix = EndMatrix<HomRational>;

/// Raised when a computation needs an x-derivative the jets do not carry
/// (second derivatives, h'' or derivatives of omitted connection terms).
class JetOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Direction index for x-derivatives and xi-derivatives: 0,1,2 are the
/// tangential coordinates, 3 is the normal coordinate x_n.
inline constexpr int kNormal = 3;

/// A value together with its first x-derivatives at x0. An empty slot is
/// untracked; using it where it multiplies something nonzero throws.
class Jet {
 public:
  Jet() { d_.fill(SymMatrix{}); }
  explicit Jet(SymMatrix value) : v_(std::move(value)) { d_.fill(SymMatrix{}); }
  Jet(SymMatrix value, std::array<std::optional<SymMatrix>, 4> slots) : v_(std::move(value)), d_(std::move(slots)) {}

  static Jet untracked(SymMatrix value);

  const SymMatrix& value() const { return v_; }
  bool tracked(int dir) const { return d_[static_cast<std::size_t>(dir)].has_value(); }
  /// Throws JetOverflow when untracked.
  const SymMatrix& slot(int dir) const;
  const std::optional<SymMatrix>& raw_slot(int dir) const { return d_[static_cast<std::size_t>(dir)]; }

  Jet& untrack();
  Jet& untrack(int dir);

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  Jet operator-() const;
  friend Jet operator*(const Jet& a, const Jet& b);
  Jet scaled(const ScalarExpr& c) const;

  /// Applies a linear operation on entries (a xi-derivative) to value and slots.
  Jet map_linear(const std::function<HomRational(const HomRational&)>& f) const;
  Jet diff_xi(int dir) const;

 private:
  SymMatrix v_;
  std::array<std::optional<SymMatrix>, 4> d_;
};

/// Graded symbol: components sigma_r for floor <= r <= top.
class GradedSymbol {
 public:
  GradedSymbol() = default;
  GradedSymbol(std::string name, int top, int floor) : name_(std::move(name)), top_(top), floor_(floor) {}

  const std::string& name() const { return name_; }
  int top() const { return top_; }
  int floor() const { return floor_; }

  void set(int order, Jet component);
  /// Zero jet for orders within range that carry no term; throws below floor.
  const Jet& jet(int order) const;
  const SymMatrix& order(int r) const { return jet(r).value(); }
  std::vector<int> orders() const;

 private:
  std::string name_;
  int top_ = 0;
  int floor_ = 0;
  std::map<int, Jet> components_;
};

/// Order-0 identity, exact down to a very low floor.
GradedSymbol identity_symbol();

/// Names accepted by catalog().
const std::vector<std::string>& catalog_names();
/// Symbols in the boundary normal form at x0. Throws std::invalid_argument on
/// unknown names.
const GradedSymbol& catalog(const std::string& name);

/// sum over |alpha| <= 2 of 1/alpha! d_xi^alpha sigma(q1) D_x^alpha sigma(q2),
/// D_x = -i d_x. Requires floor >= max(q1.floor + q2.top, q1.top + q2.floor).
GradedSymbol compose(const GradedSymbol& q1, const GradedSymbol& q2, int floor);
GradedSymbol compose(const GradedSymbol& q1, const GradedSymbol& q2);

/// x = x0 and |xi'| = 1; denominators become (xi_n - i)^k (xi_n + i)^k.
CliffordEnd at_boundary(const SymMatrix& m);
std::map<int, CliffordEnd> boundary_evaluate(const GradedSymbol& q);

/// Building blocks, exposed for tests.
namespace primitive {
Jet c_xi();                // c(xi)
Jet c_xi_prime();          // c(xi'), no x-dependence tracked beyond the normal form
Jet c_normal();            // c(dx_n)
Jet inverse_norm(int k);   // |xi|^(-2k)
Jet norm_squared();        // |xi|^2
Jet iota_vprime();         // iota(V')
Jet scalar(const ScalarExpr& v, const std::array<ScalarExpr, 4>& dx);
Jet h_prime();
}  // namespace primitive

}  // namespace ncres
