// Dense two-phase tableau simplex over an exact ordered field.
//
// Solves   min c·x  s.t.  A x = b,  x ≥ 0   with b ≥ 0 (callers flip rows).
// Bland's rule throughout, so termination does not depend on degeneracy.
#ifndef SDG_SIMPLEX_HPP
#define SDG_SIMPLEX_HPP

#include "sdg/rational.hpp"

#include <optional>
#include <vector>

namespace sdg {

template <typename Scalar>
struct StandardFormResult {
  enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
  VectorX<Scalar> x;       // basic feasible solution (Optimal, Unbounded)
  VectorX<Scalar> ray;     // A·ray = 0, ray ≥ 0, c·ray < 0 (Unbounded)
  VectorX<Scalar> farkas;  // y with yᵀA ≤ 0 and y·b > 0 (Infeasible)
  Scalar value{};          // c·x (Optimal)
};

template <typename Scalar>
class DenseSimplex {
 public:
  using Vec = VectorX<Scalar>;
  using Mat = MatrixX<Scalar>;
  using Result = StandardFormResult<Scalar>;

  /// When `objective` is empty only feasibility is decided.
  static Result solve(const Mat& A, const Vec& b, const std::optional<Vec>& objective) {
    DenseSimplex s(A, b);
    return s.run(objective);
  }

 private:
  DenseSimplex(const Mat& A, const Vec& b) : m_(A.rows()), n_(A.cols()) {
    // Columns: n structural, m artificial, then rhs.
    T_ = Mat::Zero(m_ + 1, n_ + m_ + 1);
    T_.topLeftCorner(m_, n_) = A;
    for (Eigen::Index i = 0; i < m_; ++i) {
      T_(i, n_ + i) = 1;
      T_(i, n_ + m_) = b(i);
    }
    basis_.resize(static_cast<std::size_t>(m_));
    for (Eigen::Index i = 0; i < m_; ++i) basis_[static_cast<std::size_t>(i)] = n_ + i;
    rows_alive_.assign(static_cast<std::size_t>(m_), true);
  }

  Eigen::Index rhs_col() const { return n_ + m_; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Scalar p = T_(r, c);
    for (Eigen::Index j = 0; j < T_.cols(); ++j)
      if (T_(r, j) != 0) T_(r, j) /= p;
    for (Eigen::Index i = 0; i < T_.rows(); ++i) {
      if (i == r || T_(i, c) == 0) continue;
      const Scalar f = T_(i, c);
      for (Eigen::Index j = 0; j < T_.cols(); ++j)
        if (T_(r, j) != 0) T_(i, j) -= f * T_(r, j);
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  // Objective row holds reduced costs; T_(m_, rhs) holds -value.
  void price(const Vec& cost) {
    for (Eigen::Index j = 0; j < T_.cols(); ++j) T_(m_, j) = j < cost.size() ? cost(j) : Scalar(0);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (!rows_alive_[static_cast<std::size_t>(i)]) continue;
      const Eigen::Index bc = basis_[static_cast<std::size_t>(i)];
      const Scalar cb = T_(m_, bc);
      if (cb == 0) continue;
      for (Eigen::Index j = 0; j < T_.cols(); ++j)
        if (T_(i, j) != 0) T_(m_, j) -= cb * T_(i, j);
    }
  }

  // Returns false on unboundedness, leaving the entering column in `entering`.
  bool iterate(Eigen::Index allowed_cols, Eigen::Index& entering) {
    for (;;) {
      Eigen::Index c = -1;
      for (Eigen::Index j = 0; j < allowed_cols; ++j)
        if (T_(m_, j) < 0) {
          c = j;
          break;
        }
      if (c < 0) return true;
      Eigen::Index r = -1;
      Scalar best{};
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (!rows_alive_[static_cast<std::size_t>(i)] || T_(i, c) <= 0) continue;
        const Scalar ratio = T_(i, rhs_col()) / T_(i, c);
        if (r < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(r)])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) {
        entering = c;
        return false;
      }
      pivot(r, c);
    }
  }

  Vec primal() const {
    Vec x = Vec::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (!rows_alive_[static_cast<std::size_t>(i)]) continue;
      const Eigen::Index bc = basis_[static_cast<std::size_t>(i)];
      if (bc < n_) x(bc) = T_(i, rhs_col());
    }
    return x;
  }

  Result run(const std::optional<Vec>& objective) {
    Result out;
    // Phase 1: minimise the sum of artificials.
    Vec phase1 = Vec::Zero(n_ + m_);
    for (Eigen::Index i = 0; i < m_; ++i) phase1(n_ + i) = 1;
    price(phase1);
    Eigen::Index entering = -1;
    iterate(n_ + m_, entering);  // bounded below by zero
    if (-T_(m_, rhs_col()) > 0) {
      // Reduced cost of artificial i is 1 - y_i.
      out.status = Result::Status::Infeasible;
      out.farkas = Vec(m_);
      for (Eigen::Index i = 0; i < m_; ++i) out.farkas(i) = Scalar(1) - T_(m_, n_ + i);
      return out;
    }
    // Drive artificials out of the basis; rows where that is impossible are redundant.
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_) continue;
      Eigen::Index c = -1;
      for (Eigen::Index j = 0; j < n_; ++j)
        if (T_(i, j) != 0) {
          c = j;
          break;
        }
      if (c >= 0)
        pivot(i, c);
      else
        rows_alive_[static_cast<std::size_t>(i)] = false;
    }
    if (!objective) {
      out.status = Result::Status::Optimal;
      out.x = primal();
      return out;
    }
    price(*objective);
    if (!iterate(n_, entering)) {
      out.status = Result::Status::Unbounded;
      out.x = primal();
      out.ray = Vec::Zero(n_);
      out.ray(entering) = 1;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (!rows_alive_[static_cast<std::size_t>(i)]) continue;
        const Eigen::Index bc = basis_[static_cast<std::size_t>(i)];
        if (bc < n_) out.ray(bc) = -T_(i, entering);
      }
      return out;
    }
    out.status = Result::Status::Optimal;
    out.x = primal();
    out.value = -T_(m_, rhs_col());
    return out;
  }

  Eigen::Index m_, n_;
  Mat T_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> rows_alive_;
};

}  // namespace sdg

#endif  // SDG_SIMPLEX_HPP
