// Maximal coherent sets as lexicographic probability systems.
#ifndef SDG_MAXIMAL_HPP
#define SDG_MAXIMAL_HPP

#include "sdg/sets.hpp"

#include <vector>

namespace sdg {

bool lex_member(const LexSystem& M, const Gamble& f);

/// The levels span the dual of the gamble space, so every nonzero f has a
/// nonzero expectation vector.
bool lex_is_maximal(const LexSystem& M);

/// Restricts every level to x_I, drops levels that vanish there and
/// normalises the rest. Indices of dropped levels go to `dropped` when given.
/// Throws Error when every level vanishes on x_I.
LexSystem lex_condition(const LexSystem& M, const Outcome& x_I, std::vector<std::size_t>* dropped = nullptr);

/// Echelon form that identifies lex systems denoting the same set. Each level
/// is reduced against the pivots of earlier levels only, dependent levels are
/// dropped, and each row is scaled so its pivot is ±1.
Matrix lex_canonical_form(const LexSystem& M);
bool lex_equivalent(const LexSystem& a, const LexSystem& b);

/// A nonzero h on the joint space of two binary maximal systems such that
/// neither h nor −h lies in their independent natural extension.
/// Throws EngineBug if the constructed gamble fails that check.
Gamble nonmaximality_witness(const LexSystem& M1, const LexSystem& M2);

/// M12 is an independent product: conditioning on any outcome of one block
/// yields the same set on the other block, for both blocks.
bool maximal_product_check(const LexSystem& M12, const Scope& block1);
/// Two-variable form; the blocks are the two variables.
bool maximal_product_check(const LexSystem& M12);

}  // namespace sdg

#endif  // SDG_MAXIMAL_HPP
