// Polyhedral pieces of sets of gambles and the LP queries run against them.
//
// A Cell denotes {f : ∃ aux, rows(f, aux)} with homogeneous rows, optionally
// minus the zero gamble. Every representable set is a finite union of cells.
#ifndef SDG_CONE_HPP
#define SDG_CONE_HPP

#include "sdg/exactlp.hpp"
#include "sdg/rational.hpp"

#include <optional>
#include <vector>

namespace sdg {

/// coeffs · [f ; aux]  rel  0
struct ConeRow {
  Vector coeffs;
  Relation rel = Relation::GreaterEq;
};

struct Cell {
  std::size_t dim = 0;
  std::vector<bool> aux_nonneg;
  std::vector<ConeRow> rows;
  bool exclude_zero = false;
  /// Exactly {f ≥ 0, f ≠ 0}; such cells are dominated inside sums.
  bool positive_orthant = false;
  /// Set when the cell is exactly {f ≠ 0 : f ≥ Σ λ_k g_k, λ ≥ 0}.
  std::optional<std::vector<Vector>> generators;

  std::size_t aux() const { return aux_nonneg.size(); }
  std::size_t width() const { return dim + aux(); }
  bool has_strict() const;
};

Cell generator_cell(std::size_t dim, const std::vector<Vector>& gens);
Cell functional_cell(std::size_t dim, const std::vector<std::pair<Vector, Relation>>& rows, bool exclude_zero);
Cell positive_cell(std::size_t dim);

/// {g : T g ∈ cell}. T must be injective; `keeps_orthant` states that T maps
/// the positive orthant onto positive gambles and back.
Cell substitute(const Cell& cell, const Matrix& T, bool keeps_orthant);

/// Intersection of two cells on the same space.
Cell conjoin(const Cell& a, const Cell& b);

/// Cells of {f ≠ 0 : f ≥ Σ_k M_k g_k, g_k ∈ D_k ∪ {0}} where D_k is the union
/// of `parts[k]`. All M_k must be entrywise nonnegative. Throws BudgetExceeded
/// when more than `budget` cells would be produced.
std::vector<Cell> sum_cells(std::size_t dim, const std::vector<std::vector<Cell>>& parts,
                            const std::vector<Matrix>& embeds, std::size_t budget);

bool cell_contains(const Cell& cell, const Vector& f);

struct LineSup {
  bool feasible = false;   // some point of the line lies in the cell
  bool unbounded = false;  // the cell contains the whole ray μ → ∞
  Rational value;          // sup μ when feasible and bounded
  bool attained = false;   // the supremum point itself lies in the cell
};

/// sup{μ : f0 + μ d ∈ cell}.
LineSup cell_line_sup(const Cell& cell, const Vector& f0, const Vector& d);

/// A strictly positive mass function p with p·g > 0 for every g, if one exists.
std::optional<Vector> positive_certificate(std::size_t dim, const std::vector<Vector>& gens);

/// λ ≥ 0 with Σλ = 1 and Σ λ_k g_k ≤ 0, if one exists.
std::optional<Vector> nonpositive_combination(std::size_t dim, const std::vector<Vector>& gens);

}  // namespace sdg

#endif  // SDG_CONE_HPP
