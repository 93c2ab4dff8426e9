// Reference computations used to cross-check engine answers. Each one takes a
// different route from the engine: plain loops, elimination, or determinants.
#ifndef SDG_TESTS_ORACLES_HPP
#define SDG_TESTS_ORACLES_HPP

#include "sdg/exactlp.hpp"
#include "sdg/sets.hpp"

#include <optional>
#include <vector>

namespace sdg::oracle {

/// All integer vectors in [lo, hi]^dim, last coordinate fastest.
std::vector<Vector> grid(std::size_t dim, std::int64_t lo, std::int64_t hi);

/// f ∈ posi(G>0 ∪ A) by Fourier–Motzkin on f − Σλg ≥ 0, λ ≥ 0, f ≠ 0.
/// Empty optional when elimination exceeds its budget.
std::optional<bool> natext_fm(const std::vector<Vector>& gens, const Vector& f);

/// Membership straight from the posi definition: some subset S of generators
/// with λ_k > 0 on S and λ_k = 0 off S, whose combination equals f or is
/// strictly dominated by f.
std::optional<bool> natext_posi(const std::vector<Vector>& gens, const Vector& f);

/// Some convex combination of the generators is pointwise ≤ 0.
std::optional<bool> incoherent_fm(const std::vector<Vector>& gens);

/// Vertices of {p ≥ 0, Σp = 1, p·g ≥ 0} by Cramer's rule over every choice
/// of dim − 1 tight constraints. May contain duplicates.
std::vector<Vector> credal_points(std::size_t dim, const std::vector<Vector>& gens);

/// min over points of p·f.
Rational envelope(const std::vector<Vector>& points, const Vector& f);

/// Σ_x f(x) Π_n p_n(x_n) for a row-major joint space with the given block sizes.
Rational product_expectation(const std::vector<Vector>& masses, const Vector& f);

/// min over every vertex combination of the product expectation.
Rational product_envelope(const std::vector<std::vector<Vector>>& vertex_lists, const Vector& f);

/// Lexicographic positivity of the expectation sequence.
bool lex_positive(const std::vector<Vector>& levels, const Vector& f);

/// Rank by fraction-free elimination.
std::size_t rank(const std::vector<Vector>& rows);

/// Determinant by Bareiss elimination.
Rational determinant(Matrix A);

/// sup{μ : f − μ ≥ Σ λ_j G_j, λ ≥ 0} as a direct LP over the given generators.
/// Empty when the problem is unbounded.
std::optional<Rational> generator_sup(const std::vector<Vector>& gens, const Vector& f);

/// Product generators {I{z}·g : z in the other blocks, g a block generator}
/// for a row-major joint space with the given block sizes.
std::vector<Vector> product_generators(const std::vector<std::size_t>& sizes,
                                       const std::vector<std::vector<Vector>>& block_gens);

}  // namespace sdg::oracle

#endif  // SDG_TESTS_ORACLES_HPP
