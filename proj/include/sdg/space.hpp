// Finite product spaces and gambles on them.
#ifndef SDG_SPACE_HPP
#define SDG_SPACE_HPP

#include "sdg/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdg {

struct VariableDecl {
  std::string id;
  std::vector<std::string> outcomes;

  bool operator==(const VariableDecl&) const = default;
};

/// A set of variables, kept sorted by id. Joint outcomes are enumerated
/// row-major with the first variable most significant. The empty scope has a
/// single joint outcome.
class Scope {
 public:
  Scope() = default;
  explicit Scope(std::vector<VariableDecl> vars);

  const std::vector<VariableDecl>& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  /// Number of joint outcomes.
  std::size_t size() const { return size_; }
  bool empty() const { return vars_.empty(); }

  bool contains(const std::string& id) const { return index_of(id) >= 0; }
  int index_of(const std::string& id) const;
  const VariableDecl& var(const std::string& id) const;

  bool is_subset_of(const Scope& other) const;
  bool disjoint_from(const Scope& other) const;
  Scope unite(const Scope& other) const;
  Scope minus(const Scope& other) const;
  Scope intersect(const Scope& other) const;
  /// Sub-scope made of the named variables, which must all be present.
  Scope select(const std::vector<std::string>& ids) const;

  std::vector<std::size_t> decode(std::size_t index) const;
  std::size_t encode(const std::vector<std::size_t>& digits) const;

  std::vector<std::string> ids() const;
  /// Human-readable label of a joint outcome, e.g. "X1=a,X2=b".
  std::string label(std::size_t index) const;
  std::string str() const;

  bool operator==(const Scope& other) const { return vars_ == other.vars_; }

 private:
  std::vector<VariableDecl> vars_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// A joint outcome of a scope.
struct Outcome {
  Scope scope;
  std::size_t index = 0;

  /// Outcome index of variable `id` within its own outcome list.
  std::size_t digit(const std::string& id) const;
  std::string str() const { return scope.label(index); }
};

/// Builds an outcome from an assignment id -> label. The assignment must name
/// exactly the variables of `scope`.
Outcome make_outcome(const Scope& scope, const std::map<std::string, std::string>& assignment);

/// For every joint outcome of `from`, the index of its restriction to `to`.
/// Requires to ⊆ from.
std::vector<std::size_t> restriction_map(const Scope& from, const Scope& to);

class Gamble {
 public:
  Gamble(Scope scope, Vector values);

  static Gamble constant(const Scope& scope, const Rational& value);
  static Gamble zero(const Scope& scope) { return constant(scope, 0); }

  const Scope& scope() const { return scope_; }
  const Vector& values() const { return values_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  const Rational& operator[](std::size_t i) const { return values_(static_cast<Eigen::Index>(i)); }

  bool is_zero() const { return is_zero_vector(values_); }
  /// f ≥ 0 and f ≠ 0.
  bool is_positive() const { return all_nonnegative(values_) && !is_zero(); }
  bool is_nonpositive() const { return all_nonpositive(values_); }
  bool is_nonnegative() const { return all_nonnegative(values_); }
  bool is_constant() const;

  Rational min() const;
  Rational max() const;
  Rational dot(const Vector& mass) const;

  Gamble operator-() const { return Gamble(scope_, -values_); }
  Gamble operator+(const Gamble& other) const;
  Gamble operator-(const Gamble& other) const;
  Gamble operator*(const Rational& c) const { return Gamble(scope_, values_ * c); }
  bool operator==(const Gamble& other) const;

  std::string str() const { return to_string(values_); }

 private:
  Scope scope_;
  Vector values_;
};

inline Gamble operator*(const Rational& c, const Gamble& g) { return g * c; }

/// Cylindrical extension of g to a larger scope.
Gamble embed(const Gamble& g, const Scope& target);

/// The reduced gamble on O when g depends only on the variables in O.
std::optional<Gamble> depends_only_on(const Gamble& g, const Scope& O);

Gamble indicator(const Outcome& x);

/// g(x_I, ·) on g.scope \ I.
Gamble slice(const Gamble& g, const Outcome& x_I);

/// Pointwise product on the union of both scopes.
Gamble product(const Gamble& f, const Gamble& g);

/// Matrix E with embed(g, to) = E·g.
Matrix embedding_matrix(const Scope& from, const Scope& to);

/// Matrix T with T·g = I{x_I}·embed(g, target) for g on `rest`.
/// The scopes of x_I and rest must be disjoint and contained in target.
Matrix indicator_embedding_matrix(const Outcome& x_I, const Scope& rest, const Scope& target);

}  // namespace sdg

#endif  // SDG_SPACE_HPP
