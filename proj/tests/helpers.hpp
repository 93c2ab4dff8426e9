// Shared builders and random instance generators for the unit tests.
#ifndef SDG_TESTS_HELPERS_HPP
#define SDG_TESTS_HELPERS_HPP

#include "sdg/expr.hpp"
#include "sdg/sampling.hpp"
#include "sdg/sets.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace sdg::test {

inline Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

inline Vector vec(std::initializer_list<Rational> xs) {
  Vector v(idx(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline Scope var(const std::string& id, std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return Scope({VariableDecl{id, labels}});
}

inline Scope ab(const std::string& id) { return Scope({VariableDecl{id, {"a", "b"}}}); }

inline Gamble gamble(const Scope& s, std::initializer_list<Rational> xs) { return Gamble(s, vec(xs)); }

inline Vector random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  Vector v(idx(n));
  for (std::size_t i = 0; i < n; ++i) v(idx(i)) = Rational(rng.range(lo, hi));
  return v;
}

/// Nonzero integer gambles with entries in [-3, 3].
inline std::vector<Gamble> random_generators(Rng& rng, const Scope& s, std::size_t count) {
  std::vector<Gamble> out;
  while (out.size() < count) {
    Vector v = random_vector(rng, s.size(), -3, 3);
    if (!is_zero_vector(v)) out.emplace_back(s, v);
  }
  return out;
}

/// Random mass function with small integer weights, possibly degenerate.
inline Vector random_mass(Rng& rng, std::size_t n, bool allow_zero = true) {
  Vector w(idx(n));
  Rational total = 0;
  do {
    total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      w(idx(i)) = Rational(rng.range(allow_zero ? 0 : 1, 4));
      total += w(idx(i));
    }
  } while (total == 0);
  return w / total;
}

inline Vector delta(std::size_t n, std::size_t at) {
  Vector v = Vector::Zero(idx(n));
  v(idx(at)) = 1;
  return v;
}

/// A maximal lex system: a random first level, then point masses until the
/// levels span the space.
LexSystem random_maximal_lex(Rng& rng, const Scope& s, bool allow_degenerate = true);

/// Random generator set on s that avoids non-positivity.
GeneratorSet random_coherent_generators(Rng& rng, const Scope& s, std::size_t max_count);

}  // namespace sdg::test

#endif  // SDG_TESTS_HELPERS_HPP
