// Marginalisation, cylindrical extension and conditioning.
#ifndef SDG_STRUCTURE_HPP
#define SDG_STRUCTURE_HPP

#include "sdg/expr.hpp"

namespace sdg {

/// f ∈ marg_O(E): f depends only on O and its cylindrical extension is in E.
/// f may be given on any scope between O and scope(E).
Tri marginal_member(const DesirableSetExpr& E, const Scope& O, const Gamble& f);

DesirableSetExpr cyl_ext(const DesirableSetExpr& D_O, const Scope& N);

/// E]x_I on scope(E) \ I.
DesirableSetExpr condition(const DesirableSetExpr& E, const Outcome& x_I);

/// f ∈ E|x_I: f > 0, or the x_I slice of f lies in E]x_I.
Tri condition_bar_member(const DesirableSetExpr& E, const Outcome& x_I, const Gamble& f);

}  // namespace sdg

#endif  // SDG_STRUCTURE_HPP
