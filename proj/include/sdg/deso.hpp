// Core decision procedures: avoiding non-positivity, natural extension,
// membership, preference and coherence audits.
#ifndef SDG_DESO_HPP
#define SDG_DESO_HPP

#include "sdg/expr.hpp"
#include "sdg/sampling.hpp"

#include <optional>
#include <string>

namespace sdg {

struct AnpResult {
  bool avoids = false;
  /// Strictly positive mass function p with p·g > 0 for every generator.
  std::optional<Vector> certificate;
  /// Convex weights whose combination of generators is ≤ 0.
  std::optional<Vector> lambda;
};

AnpResult avoids_nonpositivity(const GeneratorSet& A);

/// f ∈ posi(G>0 ∪ A). Throws IncoherentBase when A fails avoiding non-positivity.
bool natext_member(const GeneratorSet& A, const Gamble& f);

Tri member(const DesirableSetExpr& E, const Gamble& f);

/// f ≻ g, i.e. f − g ∈ E.
bool strictly_prefers(const DesirableSetExpr& E, const Gamble& f, const Gamble& g);

struct AxiomCheck {
  bool pass = true;
  std::string method;  // "exact", "structural" or "sampled"
  std::optional<Gamble> counterexample;
  std::string note;
};

struct AuditReport {
  AxiomCheck d1, d2, d3;
  bool pass() const { return d1.pass && d2.pass && d3.pass; }
  std::string str() const;
};

AuditReport cellset_coherence_audit(const CellSet& C, const SampleConfig& cfg = {}, const Limits& limits = {});
AuditReport lex_coherence_audit(const LexSystem& M);
/// Exact D1, sampled D2 and D3 for an arbitrary expression.
AuditReport sampled_coherence_audit(const DesirableSetExpr& E, const SampleConfig& cfg = {});

}  // namespace sdg

#endif  // SDG_DESO_HPP
