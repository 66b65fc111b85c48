#include "ncres/alphabet.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ncres {

namespace {

std::string idx(int v) { return std::to_string(v); }

std::vector<std::string> build_names() {
  std::vector<std::string> n;
  for (int j = 1; j <= 3; ++j) n.push_back("xi" + idx(j));
  n.emplace_back("hp");
  for (const char* f : {"U", "V", "W"}) {
    for (int a = 1; a <= 4; ++a) n.push_back(f + idx(a));
  }
  for (const char* f : {"dU", "dV", "dW"}) {
    for (int a = 1; a <= 4; ++a) {
      for (int j = 1; j <= 4; ++j) n.push_back(std::string(f) + idx(a) + "_" + idx(j));
    }
  }
  n.emplace_back("pi");
  n.emplace_back("Omega");
  for (const char* f : {"s", "Ric_UV", "gUV", "gV_nUVp", "gU_nVVp", "Vp2"}) n.emplace_back(f);
  // Canonical curvature index sets: i<j, k<l, (i,j) <= (k,l).
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l)
          if (std::pair(i, j) <= std::pair(k, l)) n.push_back("R" + idx(i) + idx(j) + idx(k) + idx(l));
  for (int i = 1; i <= 4; ++i)
    for (int s = 1; s <= 4; ++s)
      for (int t = s + 1; t <= 4; ++t) n.push_back("w" + idx(i) + "_" + idx(s) + idx(t));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int s = 1; s <= 4; ++s)
        for (int t = s + 1; t <= 4; ++t) n.push_back("dw" + idx(a) + "_" + idx(b) + "_" + idx(s) + idx(t));
  std::sort(n.begin(), n.end());
  return n;
}

void check_range(int v, int hi, const char* what) {
  if (v < 1 || v > hi) throw std::out_of_range(std::string("index out of range for ") + what);
}

}  // namespace

Alphabet::Alphabet() : names_(build_names()) {}

const Alphabet& Alphabet::instance() {
  static const Alphabet alphabet;
  return alphabet;
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return Symbol{static_cast<std::uint16_t>(it - names_.begin())};
}

Symbol Alphabet::at(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw std::out_of_range("unknown symbol: " + std::string(name));
}

namespace sym {

namespace {
Symbol named(const std::string& n) { return Alphabet::instance().at(n); }
}  // namespace

Symbol xi(int j) {
  check_range(j, 3, "xi");
  return named("xi" + idx(j));
}
Symbol hp() { return named("hp"); }
Symbol U(int a) {
  check_range(a, 4, "U");
  return named("U" + idx(a));
}
Symbol V(int a) {
  check_range(a, 4, "V");
  return named("V" + idx(a));
}
Symbol W(int a) {
  check_range(a, 4, "W");
  return named("W" + idx(a));
}
Symbol dU(int a, int j) {
  check_range(a, 4, "dU");
  check_range(j, 4, "dU");
  return named("dU" + idx(a) + "_" + idx(j));
}
Symbol dV(int a, int j) {
  check_range(a, 4, "dV");
  check_range(j, 4, "dV");
  return named("dV" + idx(a) + "_" + idx(j));
}
Symbol dW(int a, int j) {
  check_range(a, 4, "dW");
  check_range(j, 4, "dW");
  return named("dW" + idx(a) + "_" + idx(j));
}
Symbol pi() { return named("pi"); }
Symbol Omega() { return named("Omega"); }
Symbol scalar_curvature() { return named("s"); }

Signed omega(int i, int s, int t) {
  check_range(i, 4, "omega");
  check_range(s, 4, "omega");
  check_range(t, 4, "omega");
  if (s == t) return {Symbol{}, 0};
  int sign = s < t ? 1 : -1;
  if (s > t) std::swap(s, t);
  return {named("w" + idx(i) + "_" + idx(s) + idx(t)), sign};
}

Signed domega(int a, int b, int s, int t) {
  check_range(a, 4, "domega");
  check_range(b, 4, "domega");
  check_range(s, 4, "domega");
  check_range(t, 4, "domega");
  if (s == t) return {Symbol{}, 0};
  int sign = s < t ? 1 : -1;
  if (s > t) std::swap(s, t);
  return {named("dw" + idx(a) + "_" + idx(b) + "_" + idx(s) + idx(t)), sign};
}

Signed riemann(int i, int j, int k, int l) {
  for (int v : {i, j, k, l}) check_range(v, 4, "R");
  if (i == j || k == l) return {Symbol{}, 0};
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (k > l) {
    std::swap(k, l);
    sign = -sign;
  }
  if (std::pair(i, j) > std::pair(k, l)) {
    std::swap(i, k);
    std::swap(j, l);
  }
  return {named("R" + idx(i) + idx(j) + idx(k) + idx(l)), sign};
}

}  // namespace sym

}  // namespace ncres
