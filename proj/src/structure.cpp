#include "sdg/structure.hpp"

#include "sdg/error.hpp"

namespace sdg {

Tri marginal_member(const DesirableSetExpr& E, const Scope& O, const Gamble& f) {
  if (!O.is_subset_of(E.scope())) throw ScopeError("marginal scope " + O.str() + " not in " + E.scope().str());
  if (!f.scope().is_subset_of(E.scope())) throw ScopeError("gamble scope " + f.scope().str() + " not in " + E.scope().str());
  const Gamble full = embed(f, E.scope());
  if (!depends_only_on(full, O)) return Tri::Out;
  return E.member(full);
}

DesirableSetExpr cyl_ext(const DesirableSetExpr& D_O, const Scope& N) { return DesirableSetExpr::cyl_ext(D_O, N); }

DesirableSetExpr condition(const DesirableSetExpr& E, const Outcome& x_I) { return DesirableSetExpr::condition(E, x_I); }

Tri condition_bar_member(const DesirableSetExpr& E, const Outcome& x_I, const Gamble& f) {
  if (!(f.scope() == E.scope())) throw ScopeError("gamble scope " + f.scope().str() + " differs from " + E.scope().str());
  if (f.is_positive()) return Tri::In;
  return condition(E, x_I).member(slice(f, x_I));
}

}  // namespace sdg
