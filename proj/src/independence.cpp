#include "sdg/independence.hpp"

#include "sdg/error.hpp"

namespace sdg {

Tri irr_member(const IrrExtSpec& spec, const Gamble& h) {
  const Scope& O = spec.base.scope();
  if (!spec.irrelevant.disjoint_from(O)) throw ScopeError("irrelevant scope overlaps the base scope");
  if (!(h.scope() == spec.irrelevant.unite(O))) throw ScopeError("gamble must live on I ∪ O");
  if (h.is_zero()) return Tri::Out;
  Tri acc = Tri::In;
  for (std::size_t i = 0; i < spec.irrelevant.size(); ++i) {
    const Gamble s = slice(h, Outcome{spec.irrelevant, i});
    if (s.is_zero()) continue;
    const Tri t = spec.base.member(s);
    if (t == Tri::Out) return Tri::Out;
    if (t == Tri::Unknown) acc = Tri::Unknown;
  }
  return acc;
}

Tri irrext_member(const IrrExtSpec& spec, const Gamble& f) {
  return DesirableSetExpr::irr_ext(spec.base, spec.irrelevant, spec.target).member(f);
}

Tri inex_member(const std::vector<DesirableSetExpr>& marginals, const Gamble& h) {
  return DesirableSetExpr::indep_product(marginals).member(h);
}

std::string Verdict::label() const {
  if (!pass) return "Fail";
  return exhaustive ? "Pass(exhaustive)" : "Pass(sampled)";
}

std::string Verdict::str() const {
  std::string s = label() + " after " + std::to_string(checks) + " checks";
  if (counterexample) s += "; counterexample f=" + counterexample->str();
  if (at) s += " at " + at->str();
  if (!detail.empty()) s += "; " + detail;
  return s;
}

namespace {

void merge(Verdict& into, const Verdict& v) {
  into.checks += v.checks;
  into.exhaustive = into.exhaustive && v.exhaustive;
}

}  // namespace

Verdict is_irrelevant(const DesirableSetExpr& E, const Scope& I, const Scope& O, const SampleConfig& cfg) {
  Verdict v;
  if (!I.disjoint_from(O)) throw ScopeError("irrelevance needs disjoint scopes");
  if (!I.unite(O).is_subset_of(E.scope())) throw ScopeError("scopes not contained in " + E.scope().str());
  if (I.empty() || O.empty()) {
    v.detail = "vacuous";
    return v;
  }
  v.exhaustive = grid_is_exhaustive(O.size(), cfg);
  const Scope rest = E.scope().minus(I);
  std::vector<Matrix> T;
  for (std::size_t i = 0; i < I.size(); ++i) T.push_back(indicator_embedding_matrix(Outcome{I, i}, rest, E.scope()));
  const Matrix lift = embedding_matrix(O, rest);
  for (const auto& values : sample_gambles(O.size(), cfg)) {
    const Vector on_rest = lift * values;
    const Tri plain = E.member(embed(Gamble(O, values), E.scope()));
    for (std::size_t i = 0; i < I.size(); ++i) {
      const Tri cond = E.member(Gamble(E.scope(), T[i] * on_rest));
      ++v.checks;
      if (plain == Tri::Unknown || cond == Tri::Unknown || plain == cond) continue;
      v.pass = false;
      v.counterexample = Gamble(O, values);
      v.at = Outcome{I, i};
      v.detail = "f is " + to_string(plain) + " but I{x_I}f is " + to_string(cond);
      return v;
    }
  }
  return v;
}

Verdict is_independent(const DesirableSetExpr& E, const std::vector<Scope>& blocks, const SampleConfig& cfg) {
  Scope covered;
  for (const auto& b : blocks) {
    if (!covered.disjoint_from(b)) throw ScopeError("blocks overlap");
    covered = covered.unite(b);
  }
  if (!(covered == E.scope())) throw ScopeError("blocks do not partition " + E.scope().str());
  Verdict v;
  if (blocks.size() < 2) {
    v.detail = "single block";
    return v;
  }
  // Each block goes to I, to O, or to neither.
  std::size_t total = 1;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (total > E.limits().block_pairs / 3) throw BudgetExceeded("too many block pairs");
    total *= 3;
  }
  std::vector<int> role(blocks.size(), 0);
  for (std::size_t s = 0; s < total; ++s) {
    Scope I, O;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (role[k] == 1) I = I.unite(blocks[k]);
      if (role[k] == 2) O = O.unite(blocks[k]);
    }
    if (!I.empty() && !O.empty()) {
      const Verdict part = is_irrelevant(E, I, O, cfg);
      merge(v, part);
      if (!part.pass) {
        Verdict fail = part;
        fail.checks = v.checks;
        fail.detail = I.str() + " is relevant to " + O.str() + ": " + part.detail;
        return fail;
      }
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (++role[k] < 3) break;
      role[k] = 0;
    }
  }
  return v;
}

Verdict factorisation_check(const DesirableSetExpr& E, const Scope& I, const Scope& O, const SampleConfig& cfg) {
  if (!I.disjoint_from(O)) throw ScopeError("factorisation needs disjoint scopes");
  if (!I.unite(O).is_subset_of(E.scope())) throw ScopeError("scopes not contained in " + E.scope().str());
  Verdict v;
  SampleConfig pos = cfg;
  pos.lo = 0;
  pos.hi = std::max<std::int64_t>(1, std::min<std::int64_t>(cfg.hi, 2));
  pos.cap = std::min<std::size_t>(cfg.cap, 64);
  std::vector<Gamble> multipliers;
  for (const auto& g : sample_gambles(I.size(), pos))
    if (!is_zero_vector(g)) multipliers.emplace_back(I, g);
  v.exhaustive = grid_is_exhaustive(O.size(), cfg) && grid_is_exhaustive(I.size(), pos);

  for (const auto& values : sample_gambles(O.size(), cfg)) {
    const Gamble f(O, values);
    const Tri plain = E.member(embed(f, E.scope()));
    if (plain == Tri::Unknown) continue;
    if (plain == Tri::In) {
      for (const auto& g : multipliers) {
        const Tri t = E.member(embed(product(f, g), E.scope()));
        ++v.checks;
        if (t == Tri::Out) {
          v.pass = false;
          v.counterexample = f;
          v.detail = "f in the set but f*g is not for g=" + g.str();
          return v;
        }
      }
    } else {
      for (int c : {1, 2}) {
        const Tri t = E.member(embed(f * Rational(c), E.scope()));
        ++v.checks;
        if (t == Tri::In) {
          v.pass = false;
          v.counterexample = f;
          v.detail = "f outside the set but " + std::to_string(c) + "f is inside";
          return v;
        }
      }
    }
  }
  return v;
}

ConditionalFamily conditional_inex(const std::vector<ConditionalFamily>& families) {
  if (families.empty()) throw Error("conditional product needs at least one family");
  const Scope& Y = families.front().given();
  for (const auto& fam : families)
    if (!(fam.given() == Y)) throw ScopeError("families condition on different scopes");
  std::vector<std::optional<DesirableSetExpr>> table;
  for (std::size_t y = 0; y < Y.size(); ++y) {
    std::vector<DesirableSetExpr> slices;
    for (const auto& fam : families) slices.push_back(fam.at(Outcome{Y, y}));
    table.emplace_back(DesirableSetExpr::indep_product(slices));
  }
  return ConditionalFamily(Y, std::move(table));
}

}  // namespace sdg
