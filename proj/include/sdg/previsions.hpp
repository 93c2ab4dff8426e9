// Lower previsions induced by sets of desirable gambles, credal sets, and
// products of lower previsions.
#ifndef SDG_PREVISIONS_HPP
#define SDG_PREVISIONS_HPP

#include "sdg/expr.hpp"

#include <vector>

namespace sdg {

struct PrevisionValue {
  Rational value;
  /// f − value itself lies in the set. Suprema over open cells need not be.
  bool attained = false;
};

/// sup{μ : f − μ ∈ E}. Throws IncoherentBase when the supremum is +∞.
PrevisionValue lower_prevision_detail(const DesirableSetExpr& E, const Gamble& f);
Rational lower_prevision(const DesirableSetExpr& E, const Gamble& f);
Rational upper_prevision(const DesirableSetExpr& E, const Gamble& f);

/// sup{μ : I{x_I}(g − μ) ∈ E} for g on scope(E) \ I.
Rational conditional_lower_prevision(const DesirableSetExpr& E, const Outcome& x_I, const Gamble& g);

/// lower_prevision(E, I{x_I}(g − P(g|x_I))); zero for coherent E.
Rational gbr_residual(const DesirableSetExpr& E, const Outcome& x_I, const Gamble& g);

/// Extreme points of {p ≥ 0 : Σp = 1, p·g ≥ 0 for every generator}, found by
/// basis enumeration. Throws IncoherentBase if A fails avoiding
/// non-positivity and BudgetExceeded past limits.vertex_bases candidates.
CredalSet credal_vertices(const GeneratorSet& A, const Limits& limits = {});

/// The credal set whose lower envelope is the lower prevision of E. Defined
/// for generator-backed nodes, strictly desirable sets and lex systems (first
/// level); throws NotRepresentable otherwise.
CredalSet credal_view(const DesirableSetExpr& E);

/// Independent natural extension of the marginal lower previsions, computed
/// as one LP over h_n on the joint space and epigraph variables for the
/// slice-wise lower previsions.
Rational inex_lower_prevision(const std::vector<CredalSet>& credals, const Gamble& f);

/// min over vertex combinations of the product expectation of f.
Rational strong_product_lower(const std::vector<CredalSet>& credals, const Gamble& f, const Limits& limits = {});

/// Membership in the strong product. Exact when every marginal is a maximal
/// lex system; otherwise decided by the sign of the strong lower prevision,
/// with Unknown when it is zero and f is not positive.
Tri strong_member(const std::vector<DesirableSetExpr>& marginals, const Gamble& f);

}  // namespace sdg

#endif  // SDG_PREVISIONS_HPP
