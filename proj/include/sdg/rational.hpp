// Exact scalar and dense vector/matrix types used throughout the engine.
#ifndef SDG_RATIONAL_HPP
#define SDG_RATIONAL_HPP

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace sdg {

/// Arbitrary-precision rational. Expression templates are switched off so the
/// type composes cleanly with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

/// Parses "n", "-n" or "n/d". Anything that looks like a float ("0.5", "1e3")
/// is rejected with FloatRejected; other malformed input with ParseError.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

std::string to_string(const Vector& values);

inline int sign(const Rational& value) { return value.sign(); }

template <typename Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

template <typename Derived>
bool all_nonnegative(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) return false;
  return true;
}

template <typename Derived>
bool all_nonpositive(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) > 0) return false;
  return true;
}

}  // namespace sdg

#endif  // SDG_RATIONAL_HPP
