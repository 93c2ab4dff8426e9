#include "sdg/deso.hpp"

#include "sdg/error.hpp"
#include "sdg/linalg.hpp"

#include <algorithm>

namespace sdg {

AnpResult avoids_nonpositivity(const GeneratorSet& A) {
  AnpResult out;
  const auto gens = A.vectors();
  const std::size_t dim = A.scope().size();
  out.certificate = positive_certificate(dim, gens);
  out.avoids = out.certificate.has_value();
  if (!out.avoids) {
    out.lambda = nonpositive_combination(dim, gens);
    if (!out.lambda) throw EngineBug("neither a positivity certificate nor a non-positive combination exists");
  }
  return out;
}

bool natext_member(const GeneratorSet& A, const Gamble& f) {
  return DesirableSetExpr::generators(A).member(f) == Tri::In;
}

Tri member(const DesirableSetExpr& E, const Gamble& f) { return E.member(f); }

bool strictly_prefers(const DesirableSetExpr& E, const Gamble& f, const Gamble& g) {
  return E.member(f - g) == Tri::In;
}

std::string AuditReport::str() const {
  auto line = [](const char* name, const AxiomCheck& c) {
    std::string s = std::string(name) + ": " + (c.pass ? "pass" : "FAIL") + " (" + c.method + ")";
    if (c.counterexample) s += " counterexample " + c.counterexample->str();
    if (!c.note.empty()) s += " - " + c.note;
    return s;
  };
  return line("D1", d1) + "\n" + line("D2", d2) + "\n" + line("D3", d3);
}

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::vector<Vector> positive_samples(std::size_t dim, const SampleConfig& cfg) {
  SampleConfig pos = cfg;
  pos.lo = 0;
  pos.hi = std::max<std::int64_t>(cfg.hi, 1);
  std::vector<Vector> out;
  for (auto& v : sample_gambles(dim, pos))
    if (!is_zero_vector(v)) out.push_back(std::move(v));
  return out;
}

template <typename Contains>
AxiomCheck sampled_d2(const Scope& scope, const SampleConfig& cfg, Contains contains, std::string note = {}) {
  AxiomCheck c;
  c.method = "sampled";
  c.note = std::move(note);
  for (const auto& f : positive_samples(scope.size(), cfg))
    if (!contains(f)) {
      c.pass = false;
      c.counterexample = Gamble(scope, f);
      return c;
    }
  return c;
}

template <typename Contains>
AxiomCheck sampled_d3(const Scope& scope, const SampleConfig& cfg, Contains contains, std::string note = {}) {
  AxiomCheck c;
  c.method = "sampled";
  c.note = std::move(note);
  std::vector<Vector> members;
  for (auto& f : sample_gambles(scope.size(), cfg))
    if (contains(f)) members.push_back(std::move(f));
  std::size_t budget = cfg.cap;
  for (std::size_t i = 0; i < members.size() && budget > 0; ++i) {
    if (!contains(Vector(members[i] * Rational(2)))) {
      c.pass = false;
      c.counterexample = Gamble(scope, members[i] * Rational(2));
      return c;
    }
    for (std::size_t j = i + 1; j < members.size() && budget > 0; j += 1 + members.size() / 16, --budget) {
      Vector s = members[i] + members[j];
      if (!contains(s)) {
        c.pass = false;
        c.counterexample = Gamble(scope, s);
        c.note = "sum of " + to_string(members[i]) + " and " + to_string(members[j]);
        return c;
      }
    }
  }
  return c;
}

// Rows describing the complement of one cell, one alternative per entry.
std::vector<std::vector<CellRow>> complement_alternatives(const CellSpec& cell) {
  std::vector<std::vector<CellRow>> alts;
  for (const auto& r : cell.rows) {
    switch (r.rel) {
      case Relation::GreaterEq: alts.push_back({CellRow{-r.functional, Relation::Greater}}); break;
      case Relation::Greater: alts.push_back({CellRow{-r.functional, Relation::GreaterEq}}); break;
      case Relation::Equal:
        alts.push_back({CellRow{r.functional, Relation::Greater}});
        alts.push_back({CellRow{-r.functional, Relation::Greater}});
        break;
    }
  }
  return alts;
}

bool pointed(const CellSpec& cell, std::size_t dim) {
  if (cell.rows.empty()) return dim == 0;
  Matrix A(idx(cell.rows.size()), idx(dim));
  for (std::size_t i = 0; i < cell.rows.size(); ++i) A.row(idx(i)) = cell.rows[i].functional.transpose();
  return exact_rank(A) == idx(dim);
}

}  // namespace

AuditReport cellset_coherence_audit(const CellSet& C, const SampleConfig& cfg, const Limits& limits) {
  AuditReport rep;
  const std::size_t dim = C.scope().size();
  const Vector zero = Vector::Zero(idx(dim));
  auto contains = [&](const Vector& f) { return C.contains(f); };

  rep.d1.method = "exact";
  if (C.contains(zero)) {
    rep.d1.pass = false;
    rep.d1.counterexample = Gamble::zero(C.scope());
  }

  // D2: the positive orthant minus the union of cells must be empty. Each
  // piece of that difference picks one violated row per cell.
  if (C.include_positive()) {
    rep.d2.method = "exact";
    rep.d2.note = "positive gambles included by construction";
  } else {
    std::vector<std::vector<std::vector<CellRow>>> alts;
    std::size_t total = 1;
    bool over_budget = false, covered = false;
    for (const auto& cell : C.cells()) {
      auto a = complement_alternatives(cell);
      if (a.empty()) {
        covered = true;  // a cell without rows holds every nonzero gamble
        break;
      }
      if (total > limits.signatures / a.size()) over_budget = true;
      total *= a.size();
      alts.push_back(std::move(a));
    }
    if (covered) {
      rep.d2.method = "exact";
    } else if (over_budget) {
      rep.d2 = sampled_d2(C.scope(), cfg, contains, "complement decomposition over budget");
    } else {
      rep.d2.method = "exact";
      std::vector<std::size_t> choice(alts.size(), 0);
      for (std::size_t s = 0; s < total; ++s) {
        LinSystem sys(dim);
        for (std::size_t x = 0; x < dim; ++x) {
          Vector e = Vector::Zero(idx(dim));
          e(idx(x)) = 1;
          sys.add(std::move(e), Relation::GreaterEq);
        }
        sys.add(Vector::Ones(idx(dim)), Relation::Greater);
        for (std::size_t k = 0; k < alts.size(); ++k)
          for (const auto& r : alts[k][choice[k]]) sys.add(r.functional, r.rel);
        if (auto w = strict_feasible(sys)) {
          rep.d2.pass = false;
          rep.d2.counterexample = Gamble(C.scope(), *w);
          break;
        }
        for (std::size_t k = 0; k < alts.size(); ++k) {
          if (++choice[k] < alts[k].size()) break;
          choice[k] = 0;
        }
      }
    }
  }

  // D3: structural for single convex cells and strictly desirable sets.
  bool structural = false;
  if (C.family() == CellFamily::StrictlyDesirable) {
    structural = true;
    rep.d3.note = "strictly desirable set of a credal set";
  } else if (C.cells().empty()) {
    structural = true;
  } else if (C.cells().size() == 1) {
    const auto& cell = C.cells().front();
    const bool closed = cell.has_strict() || !cell.excludes_zero || pointed(cell, dim);
    bool absorbs_positive = true;
    if (C.include_positive()) {
      absorbs_positive = cell.has_strict();
      for (const auto& r : cell.rows)
        if (r.rel == Relation::Equal || !all_nonnegative(r.functional)) absorbs_positive = false;
    }
    structural = closed && absorbs_positive;
    if (structural) rep.d3.note = "single convex cell";
  }
  if (structural) {
    rep.d3.method = "structural";
  } else {
    rep.d3 = sampled_d3(C.scope(), cfg, contains, "closure of a general union of cells is only refuted by sampling");
  }
  return rep;
}

AuditReport lex_coherence_audit(const LexSystem& M) {
  AuditReport rep;
  rep.d1.method = "exact";
  rep.d2.method = "exact";
  rep.d3.method = "structural";
  rep.d3.note = "lexicographic positivity is closed under sums and positive scaling";
  // f > 0 is rejected exactly when it lives on outcomes every level ignores.
  for (std::size_t x = 0; x < M.scope().size(); ++x) {
    bool charged = false;
    for (const auto& p : M.levels())
      if (p(idx(x)) > 0) charged = true;
    if (!charged) {
      rep.d2.pass = false;
      rep.d2.counterexample = indicator(Outcome{M.scope(), x});
      break;
    }
  }
  return rep;
}

AuditReport sampled_coherence_audit(const DesirableSetExpr& E, const SampleConfig& cfg) {
  AuditReport rep;
  auto contains = [&](const Vector& f) { return E.member(Gamble(E.scope(), f)) == Tri::In; };
  rep.d1.method = "exact";
  if (contains(Vector::Zero(idx(E.scope().size())))) {
    rep.d1.pass = false;
    rep.d1.counterexample = Gamble::zero(E.scope());
  }
  rep.d2 = sampled_d2(E.scope(), cfg, contains);
  rep.d3 = sampled_d3(E.scope(), cfg, contains);
  return rep;
}

}  // namespace sdg
