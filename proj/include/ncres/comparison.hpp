#pragma once

#include "ncres/scalar_expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncres {

enum class Verdict { match, mismatch };

inline const char* to_string(Verdict v) { return v == Verdict::match ? "match" : "mismatch"; }

/// One engine-vs-published row. `difference` is engine - paper, rendered.
struct Comparison {
  std::string target_ref;
  std::string engine_expr;
  std::string paper_expr;
  Verdict verdict = Verdict::match;
  std::string difference;
  std::string note;
};

using Substitution = std::map<Symbol, ScalarExpr>;

/// Values applied to both sides of every comparison while the guard lives.
/// Install before starting a run; not meant to change while workers run.
class ScopedSubstitution {
 public:
  explicit ScopedSubstitution(Substitution values);
  ~ScopedSubstitution();
  ScopedSubstitution(const ScopedSubstitution&) = delete;
  ScopedSubstitution& operator=(const ScopedSubstitution&) = delete;

 private:
  Substitution previous_;
};

const Substitution& active_substitution();
ScalarExpr apply_substitution(const ScalarExpr& e);

Comparison compare_exprs(std::string target_ref, const ScalarExpr& engine, const ScalarExpr& paper,
                         std::string note = {});

inline bool all_match(const std::vector<Comparison>& rows) {
  for (const auto& r : rows) {
    if (r.verdict != Verdict::match) return false;
  }
  return true;
}

}  // namespace ncres
