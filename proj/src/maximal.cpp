#include "sdg/maximal.hpp"

#include "sdg/error.hpp"
#include "sdg/expr.hpp"
#include "sdg/linalg.hpp"

namespace sdg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_scope(const LexSystem& M, const Gamble& f) {
  if (!(f.scope() == M.scope())) throw ScopeError("gamble scope " + f.scope().str() + " differs from " + M.scope().str());
}

}  // namespace

bool lex_member(const LexSystem& M, const Gamble& f) {
  require_scope(M, f);
  return M.contains(f.values());
}

bool lex_is_maximal(const LexSystem& M) {
  if (M.depth() == 0) return M.scope().size() == 0;
  return exact_rank(M.level_matrix()) == idx(M.scope().size());
}

LexSystem lex_condition(const LexSystem& M, const Outcome& x_I, std::vector<std::size_t>* dropped) {
  if (!x_I.scope.is_subset_of(M.scope())) throw ScopeError("conditioning scope " + x_I.scope.str() + " not in " + M.scope().str());
  std::vector<Vector> levels;
  for (std::size_t i = 0; i < M.depth(); ++i) {
    Vector r = slice(Gamble(M.scope(), M.levels()[i]), x_I).values();
    const Rational total = r.sum();
    if (total == 0) {
      if (dropped) dropped->push_back(i);
      continue;
    }
    levels.push_back(r / total);
  }
  if (levels.empty()) throw Error("every level vanishes on " + x_I.str());
  LexSystem out(M.scope().minus(x_I.scope), std::move(levels));
  if (lex_is_maximal(M) && !lex_is_maximal(out)) throw EngineBug("conditioning lost maximality on " + x_I.str());
  return out;
}

Matrix lex_canonical_form(const LexSystem& M) {
  const Eigen::Index n = idx(M.scope().size());
  std::vector<Vector> rows;
  std::vector<Eigen::Index> pivots;
  for (const auto& level : M.levels()) {
    Vector r = level;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (r(pivots[j]) != 0) r -= (r(pivots[j]) / rows[j](pivots[j])) * rows[j];
    Eigen::Index p = 0;
    while (p < n && r(p) == 0) ++p;
    if (p == n) continue;
    r /= abs(r(p));
    rows.push_back(std::move(r));
    pivots.push_back(p);
  }
  Matrix out(idx(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(idx(i)) = rows[i].transpose();
  return out;
}

bool lex_equivalent(const LexSystem& a, const LexSystem& b) {
  if (!(a.scope() == b.scope())) return false;
  const Matrix ca = lex_canonical_form(a), cb = lex_canonical_form(b);
  return ca.rows() == cb.rows() && ca == cb;
}

namespace {

struct BinaryFactor {
  std::string id;
  Vector p;
  std::size_t a = 0, b = 1;
  bool degenerate = false;
};

BinaryFactor classify(const LexSystem& M) {
  if (M.scope().num_vars() != 1 || M.scope().size() != 2) throw ScopeError("witness needs a single binary variable, got " + M.scope().str());
  if (!lex_is_maximal(M)) throw Error("witness needs maximal systems");
  BinaryFactor f;
  f.id = M.scope().vars().front().id;
  f.p = M.levels().front();
  if (f.p(0) == 0 || f.p(1) == 0) {
    f.degenerate = true;
    f.a = f.p(0) == 0 ? 0 : 1;
  } else {
    Vector boundary(2);
    boundary << f.p(1), -f.p(0);
    f.a = M.contains(boundary) ? 0 : 1;
  }
  f.b = 1 - f.a;
  return f;
}

}  // namespace

Gamble nonmaximality_witness(const LexSystem& M1, const LexSystem& M2) {
  const BinaryFactor f1 = classify(M1), f2 = classify(M2);
  if (!M1.scope().disjoint_from(M2.scope())) throw ScopeError("witness needs disjoint variables");
  const Scope joint = M1.scope().unite(M2.scope());
  const std::size_t pos1 = static_cast<std::size_t>(joint.index_of(f1.id));
  Vector h = Vector::Zero(idx(joint.size()));
  auto at = [&](std::size_t x1, std::size_t x2) -> Rational& {
    std::vector<std::size_t> digits(2);
    digits[pos1] = x1;
    digits[1 - pos1] = x2;
    return h(idx(joint.encode(digits)));
  };
  const Vector& p1 = f1.p;
  const Vector& p2 = f2.p;
  const std::size_t a1 = f1.a, b1 = f1.b, a2 = f2.a, b2 = f2.b;
  if (!f1.degenerate && !f2.degenerate) {
    at(a1, b2) = p1(idx(b1)) * p2(idx(a2));
    at(b1, a2) = -p1(idx(a1)) * p2(idx(b2));
  } else if (f1.degenerate && !f2.degenerate) {
    at(b1, a2) = -p2(idx(b2));
    at(b1, b2) = p2(idx(a2));
    at(a1, a2) = 1;
    at(a1, b2) = 1;
  } else if (!f1.degenerate && f2.degenerate) {
    at(a1, b2) = -p1(idx(b1));
    at(b1, b2) = p1(idx(a1));
    at(a1, a2) = 1;
    at(b1, a2) = 1;
  } else {
    at(b1, a2) = 1;
    at(a1, b2) = -1;
  }
  const Gamble witness(joint, h);
  const auto product = DesirableSetExpr::indep_product({DesirableSetExpr::lex(M1), DesirableSetExpr::lex(M2)});
  if (product.member(witness) != Tri::Out || product.member(-witness) != Tri::Out)
    throw EngineBug("constructed gamble " + witness.str() + " does not witness non-maximality");
  return witness;
}

namespace {

bool slices_agree(const LexSystem& M, const Scope& block) {
  std::optional<LexSystem> first;
  for (std::size_t x = 0; x < block.size(); ++x) {
    LexSystem c = lex_condition(M, Outcome{block, x});
    if (!first) first = std::move(c);
    else if (!lex_equivalent(*first, c)) return false;
  }
  return true;
}

}  // namespace

bool maximal_product_check(const LexSystem& M12, const Scope& block1) {
  if (!block1.is_subset_of(M12.scope()) || block1.empty() || block1 == M12.scope())
    throw ScopeError("block " + block1.str() + " must be a proper nonempty part of " + M12.scope().str());
  const Scope block2 = M12.scope().minus(block1);
  return slices_agree(M12, block2) && slices_agree(M12, block1);
}

bool maximal_product_check(const LexSystem& M12) {
  if (M12.scope().num_vars() != 2) throw ScopeError("two-block check needs exactly two variables");
  return maximal_product_check(M12, M12.scope().select({M12.scope().vars().front().id}));
}

}  // namespace sdg
