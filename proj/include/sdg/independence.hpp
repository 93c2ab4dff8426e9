// Irrelevant and independent natural extension, and refutation checks for
// irrelevance, independence and factorisation.
#ifndef SDG_INDEPENDENCE_HPP
#define SDG_INDEPENDENCE_HPP

#include "sdg/expr.hpp"
#include "sdg/sampling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sdg {

struct IrrExtSpec {
  DesirableSetExpr base;  // D_O
  Scope irrelevant;       // I, disjoint from O
  Scope target;           // N ⊇ I ∪ O
};

/// h ∈ A^irr_{I→O}: h ≠ 0 and every slice h(x_I, ·) lies in D_O ∪ {0}.
/// h must live on I ∪ O.
Tri irr_member(const IrrExtSpec& spec, const Gamble& h);

/// Membership in the natural extension of A^irr_{I→O} to the target scope.
Tri irrext_member(const IrrExtSpec& spec, const Gamble& f);

/// Membership in the independent natural extension of the marginals.
Tri inex_member(const std::vector<DesirableSetExpr>& marginals, const Gamble& h);

struct Verdict {
  bool pass = true;
  bool exhaustive = true;   // every grid point was examined
  std::size_t checks = 0;   // membership comparisons made
  std::optional<Gamble> counterexample;
  std::optional<Outcome> at;  // conditioning outcome of the counterexample
  std::string detail;

  std::string label() const;  // "Pass(exhaustive)", "Pass(sampled)" or "Fail"
  std::string str() const;
};

/// Refutes irrelevance of I to O: f ∈ E ⇔ I{x_I} f ∈ E for f on O and all x_I.
Verdict is_irrelevant(const DesirableSetExpr& E, const Scope& I, const Scope& O, const SampleConfig& cfg = {});

/// Runs is_irrelevant on every pair of disjoint nonempty unions of blocks.
Verdict is_independent(const DesirableSetExpr& E, const std::vector<Scope>& blocks, const SampleConfig& cfg = {});

/// For f on O in E and g > 0 on I, checks f·g ∈ E; for f on O outside E,
/// checks that positive constant multiples stay outside.
Verdict factorisation_check(const DesirableSetExpr& E, const Scope& I, const Scope& O, const SampleConfig& cfg = {});

/// y ↦ ⊗_n (D_n]y). Every family must share the conditioning scope.
ConditionalFamily conditional_inex(const std::vector<ConditionalFamily>& families);

}  // namespace sdg

#endif  // SDG_INDEPENDENCE_HPP
