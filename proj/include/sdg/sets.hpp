// Leaf representations of sets of desirable gambles and credal sets.
#ifndef SDG_SETS_HPP
#define SDG_SETS_HPP

#include "sdg/exactlp.hpp"
#include "sdg/space.hpp"

#include <optional>
#include <vector>

namespace sdg {

/// A finite assessment A. Denotes its natural extension posi(G>0 ∪ A).
class GeneratorSet {
 public:
  /// Rejects zero generators and drops exact duplicates.
  GeneratorSet(Scope scope, std::vector<Gamble> gens);

  const Scope& scope() const { return scope_; }
  const std::vector<Gamble>& gens() const { return gens_; }
  std::vector<Vector> vectors() const;

 private:
  Scope scope_;
  std::vector<Gamble> gens_;
};

struct CellRow {
  Vector functional;
  Relation rel = Relation::GreaterEq;
};

/// Σ_x functional(x) f(x) rel 0 for every row, optionally minus the zero gamble.
struct CellSpec {
  std::vector<CellRow> rows;
  bool excludes_zero = false;

  bool has_strict() const;
  bool contains(const Vector& f) const;
};

class CredalSet;

enum class CellFamily { Generic, StrictlyDesirable };

/// A finite union of cells, plus the positive gambles when flagged.
class CellSet {
 public:
  CellSet(Scope scope, std::vector<CellSpec> cells, bool include_positive,
          CellFamily family = CellFamily::Generic);

  const Scope& scope() const { return scope_; }
  const std::vector<CellSpec>& cells() const { return cells_; }
  bool include_positive() const { return include_positive_; }
  CellFamily family() const { return family_; }
  /// Vertices that generated a strictly desirable set.
  const std::vector<Vector>& credal_vertices() const { return vertices_; }

  bool contains(const Vector& f) const;

  CellSet with_cell(CellSpec extra) const;

 private:
  friend CellSet strictly_desirable(const CredalSet& credal);
  Scope scope_;
  std::vector<CellSpec> cells_;
  bool include_positive_;
  CellFamily family_;
  std::vector<Vector> vertices_;
};

/// Lexicographic probability system: f is desirable iff its vector of level
/// expectations is lexicographically positive.
class LexSystem {
 public:
  /// Levels must be mass functions on the scope.
  LexSystem(Scope scope, std::vector<Vector> levels);

  const Scope& scope() const { return scope_; }
  const std::vector<Vector>& levels() const { return levels_; }
  std::size_t depth() const { return levels_.size(); }

  std::vector<Rational> expectations(const Vector& f) const;
  bool contains(const Vector& f) const;
  Matrix level_matrix() const;

  bool operator==(const LexSystem& other) const { return scope_ == other.scope_ && levels_ == other.levels_; }

 private:
  Scope scope_;
  std::vector<Vector> levels_;
};

/// Finite set of mass functions, pruned to its extreme points on construction.
class CredalSet {
 public:
  CredalSet(Scope scope, std::vector<Vector> points);

  const Scope& scope() const { return scope_; }
  const std::vector<Vector>& vertices() const { return vertices_; }

  /// min over vertices of p·f.
  Rational lower(const Vector& f) const;
  Rational upper(const Vector& f) const;

 private:
  Scope scope_;
  std::vector<Vector> vertices_;
};

bool is_mass_function(const Vector& p);

/// True when p is a convex combination of the given points (exact LP).
bool in_convex_hull(const Vector& p, const std::vector<Vector>& points);

/// {f : f > 0 or P(f) > 0} for the lower envelope P of the credal set.
CellSet strictly_desirable(const CredalSet& credal);

}  // namespace sdg

#endif  // SDG_SETS_HPP
