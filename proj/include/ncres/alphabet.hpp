#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncres {

/// Index into the fixed symbol alphabet. Ids follow the lexicographic order of
/// the symbol names, so comparing ids compares names.
struct Symbol {
  std::uint16_t id = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// The closed set of formal commuting symbols. Components are 1-based and the
/// last coordinate (index 4) is the inward normal direction x_n.
///
///   xi1..xi3          components of the tangential covector xi'
///   hp                h'(0)
///   U1..U4, V1..V4    components of the vector fields U, V
///   W1..W4            components of V'
///   dU{a}_{j}         dU_a/dx_j (likewise dV, dW)
///   pi, Omega         pi and the volume of the unit xi'-sphere
///   s, Ric_UV, gUV, gV_nUVp, gU_nVVp, Vp2
///                     closed-manifold functional slots
///   R{ijkl}           curvature components, canonical index order
///   w{i}_{st}         omega_{s,t}(e_i) with s<t
///   dw{a}_{b}_{st}    e_a(omega_{s,t}(e_b)) with s<t
class Alphabet {
 public:
  static const Alphabet& instance();

  std::size_t size() const { return names_.size(); }
  const std::string& name(Symbol s) const { return names_[s.id]; }
  std::optional<Symbol> find(std::string_view name) const;
  Symbol at(std::string_view name) const;  // throws std::out_of_range

 private:
  Alphabet();
  std::vector<std::string> names_;
};

namespace sym {

Symbol xi(int j);  // j in 1..3
Symbol hp();
Symbol U(int a);
Symbol V(int a);
Symbol W(int a);
Symbol dU(int a, int j);
Symbol dV(int a, int j);
Symbol dW(int a, int j);
Symbol pi();
Symbol Omega();
Symbol scalar_curvature();

/// omega_{s,t}(e_i); returns the canonical symbol and the sign of the
/// reordering. Sign 0 means the component vanishes identically (s == t).
struct Signed {
  Symbol symbol;
  int sign;
};
Signed omega(int i, int s, int t);
Signed domega(int a, int b, int s, int t);

/// R_{ijkl} with R_{ijkl} = -R_{jikl} = -R_{ijlk} = R_{klij}.
Signed riemann(int i, int j, int k, int l);

}  // namespace sym

}  // namespace ncres
