#include "ncres/comparison.hpp"

namespace ncres {

namespace {
Substitution& current() {
  static Substitution s;
  return s;
}
}  // namespace

ScopedSubstitution::ScopedSubstitution(Substitution values) : previous_(std::move(current())) {
  current() = std::move(values);
}

ScopedSubstitution::~ScopedSubstitution() { current() = std::move(previous_); }

const Substitution& active_substitution() { return current(); }

ScalarExpr apply_substitution(const ScalarExpr& e) {
  const Substitution& s = current();
  return s.empty() ? e : e.substitute(s);
}

Comparison compare_exprs(std::string target_ref, const ScalarExpr& engine_in, const ScalarExpr& paper_in,
                         std::string note) {
  const ScalarExpr engine = apply_substitution(engine_in);
  const ScalarExpr paper = apply_substitution(paper_in);
  Comparison c;
  c.target_ref = std::move(target_ref);
  c.engine_expr = engine.str();
  c.paper_expr = paper.str();
  ScalarExpr diff = engine - paper;
  c.verdict = diff.is_zero() ? Verdict::match : Verdict::mismatch;
  c.difference = diff.str();
  c.note = std::move(note);
  return c;
}

}  // namespace ncres
