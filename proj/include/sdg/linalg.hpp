// Small exact dense kernels. Pivoting picks any nonzero entry, which is all an
// exact field needs.
#ifndef SDG_LINALG_HPP
#define SDG_LINALG_HPP

#include "sdg/rational.hpp"

#include <optional>

namespace sdg {

template <typename Scalar>
Eigen::Index exact_rank(MatrixX<Scalar> A) {
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < A.cols() && rank < A.rows(); ++c) {
    Eigen::Index p = rank;
    while (p < A.rows() && A(p, c) == 0) ++p;
    if (p == A.rows()) continue;
    A.row(p).swap(A.row(rank));
    for (Eigen::Index r = rank + 1; r < A.rows(); ++r) {
      if (A(r, c) == 0) continue;
      const Scalar f = A(r, c) / A(rank, c);
      A.row(r) -= f * A.row(rank);
    }
    ++rank;
  }
  return rank;
}

/// Unique solution of a square system, or nothing when A is singular.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_square(MatrixX<Scalar> A, VectorX<Scalar> b) {
  const Eigen::Index n = A.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && A(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      A.row(p).swap(A.row(c));
      std::swap(b(p), b(c));
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || A(r, c) == 0) continue;
      const Scalar f = A(r, c) / A(c, c);
      A.row(r) -= f * A.row(c);
      b(r) -= f * b(c);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) b(i) /= A(i, i);
  return b;
}

}  // namespace sdg

#endif  // SDG_LINALG_HPP
