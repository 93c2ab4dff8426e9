#include "sdg/previsions.hpp"

#include "sdg/error.hpp"
#include "sdg/linalg.hpp"
#include "sdg/maximal.hpp"

namespace sdg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::vector<CredalSet> credal_views(const std::vector<DesirableSetExpr>& marginals) {
  std::vector<CredalSet> out;
  for (const auto& m : marginals) out.push_back(credal_view(m));
  return out;
}

Scope joint_scope(const std::vector<CredalSet>& credals) {
  if (credals.empty()) throw Error("product needs at least one marginal");
  Scope joint;
  for (const auto& c : credals) {
    if (!joint.disjoint_from(c.scope())) throw ScopeError("marginal scopes overlap");
    joint = joint.unite(c.scope());
  }
  return joint;
}

}  // namespace

PrevisionValue lower_prevision_detail(const DesirableSetExpr& E, const Gamble& f) {
  if (!(f.scope() == E.scope())) throw ScopeError("gamble scope " + f.scope().str() + " differs from " + E.scope().str());
  if (E.kind() == DesirableSetExpr::Kind::StrongProduct) {
    // Strong lower previsions are minima over finitely many linear previsions.
    return {strong_product_lower(credal_views(E.children()), f, E.limits()), true};
  }
  const Vector down = -Vector::Ones(idx(f.size()));
  std::optional<PrevisionValue> best;
  for (const auto& cell : E.compiled().cells) {
    const LineSup s = cell_line_sup(cell, f.values(), down);
    if (!s.feasible) continue;
    if (s.unbounded) throw IncoherentBase("lower prevision is unbounded: " + E.describe() + " is incoherent");
    if (!best || s.value > best->value) best = PrevisionValue{s.value, s.attained};
    else if (s.value == best->value) best->attained = best->attained || s.attained;
  }
  if (!best) throw IncoherentBase("no f - mu lies in " + E.describe());
  return *best;
}

Rational lower_prevision(const DesirableSetExpr& E, const Gamble& f) { return lower_prevision_detail(E, f).value; }

Rational upper_prevision(const DesirableSetExpr& E, const Gamble& f) { return -lower_prevision(E, -f); }

Rational conditional_lower_prevision(const DesirableSetExpr& E, const Outcome& x_I, const Gamble& g) {
  return lower_prevision(DesirableSetExpr::condition(E, x_I), g);
}

Rational gbr_residual(const DesirableSetExpr& E, const Outcome& x_I, const Gamble& g) {
  const Rational c = conditional_lower_prevision(E, x_I, g);
  const Matrix T = indicator_embedding_matrix(x_I, g.scope(), E.scope());
  const Vector shifted = g.values() - Vector::Constant(idx(g.size()), c);
  return lower_prevision(E, Gamble(E.scope(), T * shifted));
}

CredalSet credal_vertices(const GeneratorSet& A, const Limits& limits) {
  const std::size_t d = A.scope().size();
  const auto gens = A.vectors();
  if (!positive_certificate(d, gens)) throw IncoherentBase("assessment does not avoid non-positivity");
  // Inequalities a·p ≥ 0: the coordinate rows, then the generators.
  std::vector<Vector> rows;
  for (std::size_t x = 0; x < d; ++x) {
    Vector e = Vector::Zero(idx(d));
    e(idx(x)) = 1;
    rows.push_back(std::move(e));
  }
  for (const auto& g : gens) rows.push_back(g);
  const std::size_t m = rows.size(), k = d - 1;

  // C(m, k) candidate bases.
  std::size_t bases = 1;
  for (std::size_t i = 0; i < k; ++i) {
    bases = bases * (m - i) / (i + 1);
    if (bases > limits.vertex_bases) throw BudgetExceeded("vertex enumeration needs more than " + std::to_string(limits.vertex_bases) + " bases");
  }

  std::vector<Vector> points;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Matrix M(idx(d), idx(d));
    Vector b = Vector::Zero(idx(d));
    for (std::size_t i = 0; i < k; ++i) M.row(idx(i)) = rows[pick[i]].transpose();
    M.row(idx(k)) = Vector::Ones(idx(d)).transpose();
    b(idx(k)) = 1;
    if (auto p = solve_square<Rational>(M, b)) {
      bool ok = true;
      for (const auto& r : rows)
        if (r.dot(*p) < 0) ok = false;
      if (ok) {
        bool seen = false;
        for (const auto& q : points) seen = seen || q == *p;
        if (!seen) points.push_back(*p);
      }
    }
    // Next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (points.empty()) throw IncoherentBase("credal set is empty");
  return CredalSet(A.scope(), std::move(points));
}

CredalSet credal_view(const DesirableSetExpr& E) {
  if (const auto* g = E.as_generators()) return credal_vertices(*g, E.limits());
  if (const auto* c = E.as_cells(); c && c->family() == CellFamily::StrictlyDesirable)
    return CredalSet(E.scope(), c->credal_vertices());
  if (const auto* M = E.as_lex()) {
    if (M->depth() == 0) throw NotRepresentable("empty lex system has no credal view");
    return CredalSet(E.scope(), {M->levels().front()});
  }
  if (E.kind() != DesirableSetExpr::Kind::StrongProduct && E.kind() != DesirableSetExpr::Kind::Cells &&
      E.kind() != DesirableSetExpr::Kind::Lex) {
    const Compiled& c = E.compiled();
    if (c.generators) {
      std::vector<Gamble> gs;
      for (const auto& v : *c.generators) gs.emplace_back(E.scope(), v);
      return credal_vertices(GeneratorSet(E.scope(), std::move(gs)), E.limits());
    }
  }
  throw NotRepresentable("no credal view for " + E.describe());
}

Rational inex_lower_prevision(const std::vector<CredalSet>& credals, const Gamble& f) {
  const Scope joint = joint_scope(credals);
  if (!(f.scope() == joint)) throw ScopeError("gamble scope " + f.scope().str() + " differs from " + joint.str());
  const std::size_t X = joint.size(), B = credals.size();

  // Layout: h_1..h_B (X each), then s_{n,z} for each block, then t.
  std::vector<std::size_t> s_offset(B);
  std::vector<std::vector<std::size_t>> to_block(B), to_rest(B);
  std::size_t nvars = B * X;
  for (std::size_t n = 0; n < B; ++n) {
    const Scope& S = credals[n].scope();
    const Scope rest = joint.minus(S);
    to_block[n] = restriction_map(joint, S);
    to_rest[n] = restriction_map(joint, rest);
    s_offset[n] = nvars;
    nvars += rest.size();
  }
  const std::size_t t = nvars++;

  LinSystem sys(nvars);
  for (std::size_t n = 0; n < B; ++n) {
    const std::size_t Z = joint.minus(credals[n].scope()).size();
    for (std::size_t z = 0; z < Z; ++z)
      for (const auto& p : credals[n].vertices()) {
        // p · h_n(·, z) − s_{n,z} ≥ 0
        Vector row = Vector::Zero(idx(nvars));
        for (std::size_t x = 0; x < X; ++x)
          if (to_rest[n][x] == z) row(idx(n * X + x)) = p(idx(to_block[n][x]));
        row(idx(s_offset[n] + z)) = -1;
        sys.add(std::move(row), Relation::GreaterEq);
      }
  }
  for (std::size_t x = 0; x < X; ++x) {
    // f(x) − Σ h_n(x) + Σ s_{n,z_n(x)} − t ≥ 0
    Vector row = Vector::Zero(idx(nvars));
    for (std::size_t n = 0; n < B; ++n) {
      row(idx(n * X + x)) = -1;
      row(idx(s_offset[n] + to_rest[n][x])) += 1;
    }
    row(idx(t)) = -1;
    sys.add(std::move(row), Relation::GreaterEq, -f[x]);
  }
  Vector obj = Vector::Zero(idx(nvars));
  obj(idx(t)) = 1;
  sys.maximize(std::move(obj));
  const LPOutcome r = solve(sys);
  if (const auto* o = std::get_if<Optimal>(&r)) return o->value;
  throw EngineBug("independent natural extension LP did not reach an optimum");
}

Rational strong_product_lower(const std::vector<CredalSet>& credals, const Gamble& f, const Limits& limits) {
  const Scope joint = joint_scope(credals);
  if (!(f.scope() == joint)) throw ScopeError("gamble scope " + f.scope().str() + " differs from " + joint.str());
  std::size_t total = 1;
  for (const auto& c : credals) {
    if (total > limits.combinations / c.vertices().size()) throw BudgetExceeded("too many vertex combinations");
    total *= c.vertices().size();
  }
  std::vector<std::vector<std::size_t>> to_block;
  for (const auto& c : credals) to_block.push_back(restriction_map(joint, c.scope()));

  std::optional<Rational> best;
  std::vector<std::size_t> pick(credals.size(), 0);
  for (std::size_t s = 0; s < total; ++s) {
    Rational e = 0;
    for (std::size_t x = 0; x < joint.size(); ++x) {
      if (f[x] == 0) continue;
      Rational w = f[x];
      for (std::size_t n = 0; n < credals.size() && w != 0; ++n) w *= credals[n].vertices()[pick[n]](idx(to_block[n][x]));
      e += w;
    }
    if (!best || e < *best) best = e;
    for (std::size_t n = 0; n < credals.size(); ++n) {
      if (++pick[n] < credals[n].vertices().size()) break;
      pick[n] = 0;
    }
  }
  return *best;
}

Tri strong_member(const std::vector<DesirableSetExpr>& marginals, const Gamble& f) {
  if (f.is_zero()) return Tri::Out;
  if (f.is_positive()) return Tri::In;
  bool all_maximal_lex = true;
  for (const auto& m : marginals)
    if (!m.as_lex() || !lex_is_maximal(*m.as_lex())) all_maximal_lex = false;
  if (all_maximal_lex) return DesirableSetExpr::indep_product(marginals).member(f);
  const Rational S = strong_product_lower(credal_views(marginals), f, marginals.front().limits());
  if (S > 0) return Tri::In;
  if (S < 0) return Tri::Out;
  return Tri::Unknown;
}

}  // namespace sdg
