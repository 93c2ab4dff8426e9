#include "sdg/sets.hpp"

#include "sdg/error.hpp"

#include <algorithm>

namespace sdg {

namespace {

bool holds(const Rational& v, Relation rel) {
  switch (rel) {
    case Relation::GreaterEq: return v >= 0;
    case Relation::Equal: return v == 0;
    case Relation::Greater: return v > 0;
  }
  return false;
}

void check_length(const Vector& v, const Scope& scope, const char* what) {
  if (static_cast<std::size_t>(v.size()) != scope.size())
    throw DimensionError(std::string(what) + " has " + std::to_string(v.size()) + " entries, scope " + scope.str() +
                         " has " + std::to_string(scope.size()) + " outcomes");
}

}  // namespace

GeneratorSet::GeneratorSet(Scope scope, std::vector<Gamble> gens) : scope_(std::move(scope)) {
  for (auto& g : gens) {
    if (!(g.scope() == scope_)) throw ScopeError("generator scope " + g.scope().str() + " differs from " + scope_.str());
    if (g.is_zero()) throw Error("zero gamble in generator list");
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
}

std::vector<Vector> GeneratorSet::vectors() const {
  std::vector<Vector> out;
  for (const auto& g : gens_) out.push_back(g.values());
  return out;
}

bool CellSpec::has_strict() const {
  return std::any_of(rows.begin(), rows.end(), [](const CellRow& r) { return r.rel == Relation::Greater; });
}

bool CellSpec::contains(const Vector& f) const {
  if (excludes_zero && is_zero_vector(f)) return false;
  for (const auto& r : rows)
    if (!holds(r.functional.dot(f), r.rel)) return false;
  return true;
}

CellSet::CellSet(Scope scope, std::vector<CellSpec> cells, bool include_positive, CellFamily family)
    : scope_(std::move(scope)), cells_(std::move(cells)), include_positive_(include_positive), family_(family) {
  for (const auto& c : cells_)
    for (const auto& r : c.rows) check_length(r.functional, scope_, "cell functional");
}

bool CellSet::contains(const Vector& f) const {
  check_length(f, scope_, "gamble");
  if (include_positive_ && all_nonnegative(f) && !is_zero_vector(f)) return true;
  return std::any_of(cells_.begin(), cells_.end(), [&](const CellSpec& c) { return c.contains(f); });
}

CellSet CellSet::with_cell(CellSpec extra) const {
  std::vector<CellSpec> cells = cells_;
  cells.push_back(std::move(extra));
  return CellSet(scope_, std::move(cells), include_positive_, CellFamily::Generic);
}

bool is_mass_function(const Vector& p) { return all_nonnegative(p) && p.sum() == 1; }

LexSystem::LexSystem(Scope scope, std::vector<Vector> levels) : scope_(std::move(scope)), levels_(std::move(levels)) {
  for (const auto& p : levels_) {
    check_length(p, scope_, "lex level");
    if (!is_mass_function(p)) throw Error("lex level " + to_string(p) + " is not a mass function");
  }
}

std::vector<Rational> LexSystem::expectations(const Vector& f) const {
  check_length(f, scope_, "gamble");
  std::vector<Rational> out;
  for (const auto& p : levels_) out.push_back(p.dot(f));
  return out;
}

bool LexSystem::contains(const Vector& f) const {
  check_length(f, scope_, "gamble");
  for (const auto& p : levels_) {
    const Rational e = p.dot(f);
    if (e != 0) return e > 0;
  }
  return false;
}

Matrix LexSystem::level_matrix() const {
  Matrix m(static_cast<Eigen::Index>(levels_.size()), static_cast<Eigen::Index>(scope_.size()));
  for (std::size_t i = 0; i < levels_.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = levels_[i].transpose();
  return m;
}

bool in_convex_hull(const Vector& p, const std::vector<Vector>& points) {
  if (points.empty()) return false;
  const std::size_t k = points.size();
  LinSystem sys(std::vector<std::string>(k, "w"), std::vector<bool>(k, true));
  sys.add(Vector::Ones(static_cast<Eigen::Index>(k)), Relation::Equal, 1);
  for (Eigen::Index x = 0; x < p.size(); ++x) {
    Vector row(static_cast<Eigen::Index>(k));
    for (std::size_t j = 0; j < k; ++j) row(static_cast<Eigen::Index>(j)) = points[j](x);
    sys.add(std::move(row), Relation::Equal, p(x));
  }
  return std::holds_alternative<Feasible>(solve(sys));
}

CredalSet::CredalSet(Scope scope, std::vector<Vector> points) : scope_(std::move(scope)) {
  std::vector<Vector> unique;
  for (auto& p : points) {
    check_length(p, scope_, "credal point");
    if (!is_mass_function(p)) throw Error("credal point " + to_string(p) + " is not a mass function");
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(std::move(p));
  }
  if (unique.empty()) throw Error("credal set needs at least one mass function");
  // Keep a point only when it is not a mixture of the others.
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.push_back(unique[j]);
    if (!in_convex_hull(unique[i], others)) vertices_.push_back(unique[i]);
  }
  if (vertices_.empty()) throw EngineBug("credal pruning removed every point");
}

Rational CredalSet::lower(const Vector& f) const {
  check_length(f, scope_, "gamble");
  Rational best = vertices_.front().dot(f);
  for (const auto& v : vertices_) best = std::min(best, Rational(v.dot(f)));
  return best;
}

Rational CredalSet::upper(const Vector& f) const {
  check_length(f, scope_, "gamble");
  Rational best = vertices_.front().dot(f);
  for (const auto& v : vertices_) best = std::max(best, Rational(v.dot(f)));
  return best;
}

CellSet strictly_desirable(const CredalSet& credal) {
  CellSpec cell;
  for (const auto& v : credal.vertices()) cell.rows.push_back(CellRow{v, Relation::Greater});
  CellSet out(credal.scope(), {cell}, true, CellFamily::StrictlyDesirable);
  out.vertices_ = credal.vertices();
  return out;
}

}  // namespace sdg
