#include "sdg/space.hpp"

#include "sdg/error.hpp"

#include <algorithm>
#include <set>

namespace sdg {

Scope::Scope(std::vector<VariableDecl> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end(),
            [](const VariableDecl& a, const VariableDecl& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.id.empty()) throw ScopeError("variable with empty id");
    if (i > 0 && vars_[i - 1].id == v.id) throw ScopeError("duplicate variable '" + v.id + "'");
    if (v.outcomes.empty()) throw ScopeError("variable '" + v.id + "' has no outcomes");
    std::set<std::string> labels(v.outcomes.begin(), v.outcomes.end());
    if (labels.size() != v.outcomes.size())
      throw ScopeError("variable '" + v.id + "' has repeated outcome labels");
  }
  strides_.assign(vars_.size(), 1);
  size_ = 1;
  for (std::size_t i = vars_.size(); i-- > 0;) {
    strides_[i] = size_;
    size_ *= vars_[i].outcomes.size();
  }
}

int Scope::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].id == id) return static_cast<int>(i);
  return -1;
}

const VariableDecl& Scope::var(const std::string& id) const {
  const int i = index_of(id);
  if (i < 0) throw ScopeError("variable '" + id + "' not in scope " + str());
  return vars_[static_cast<std::size_t>(i)];
}

bool Scope::is_subset_of(const Scope& other) const {
  for (const auto& v : vars_) {
    const int j = other.index_of(v.id);
    if (j < 0) return false;
    if (other.vars_[static_cast<std::size_t>(j)].outcomes != v.outcomes)
      throw ScopeError("variable '" + v.id + "' declared with different outcomes");
  }
  return true;
}

bool Scope::disjoint_from(const Scope& other) const {
  for (const auto& v : vars_)
    if (other.contains(v.id)) return false;
  return true;
}

Scope Scope::unite(const Scope& other) const {
  std::vector<VariableDecl> all = vars_;
  for (const auto& v : other.vars_) {
    const int j = index_of(v.id);
    if (j < 0) {
      all.push_back(v);
    } else if (vars_[static_cast<std::size_t>(j)].outcomes != v.outcomes) {
      throw ScopeError("variable '" + v.id + "' declared with different outcomes");
    }
  }
  return Scope(std::move(all));
}

Scope Scope::minus(const Scope& other) const {
  std::vector<VariableDecl> kept;
  for (const auto& v : vars_)
    if (!other.contains(v.id)) kept.push_back(v);
  return Scope(std::move(kept));
}

Scope Scope::intersect(const Scope& other) const {
  std::vector<VariableDecl> kept;
  for (const auto& v : vars_)
    if (other.contains(v.id)) kept.push_back(v);
  return Scope(std::move(kept));
}

Scope Scope::select(const std::vector<std::string>& ids) const {
  std::vector<VariableDecl> kept;
  for (const auto& id : ids) kept.push_back(var(id));
  return Scope(std::move(kept));
}

std::vector<std::size_t> Scope::decode(std::size_t index) const {
  if (index >= size_) throw InvalidOutcome("outcome index out of range");
  std::vector<std::size_t> digits(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    digits[i] = index / strides_[i];
    index %= strides_[i];
  }
  return digits;
}

std::size_t Scope::encode(const std::vector<std::size_t>& digits) const {
  if (digits.size() != vars_.size()) throw InvalidOutcome("wrong number of outcome digits");
  std::size_t index = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (digits[i] >= vars_[i].outcomes.size()) throw InvalidOutcome("outcome digit out of range");
    index += digits[i] * strides_[i];
  }
  return index;
}

std::vector<std::string> Scope::ids() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) out.push_back(v.id);
  return out;
}

std::string Scope::label(std::size_t index) const {
  const auto digits = decode(index);
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ",";
    out += vars_[i].id + "=" + vars_[i].outcomes[digits[i]];
  }
  return out.empty() ? "()" : out;
}

std::string Scope::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ",";
    out += vars_[i].id;
  }
  return out + "}";
}

std::size_t Outcome::digit(const std::string& id) const {
  const int i = scope.index_of(id);
  if (i < 0) throw ScopeError("variable '" + id + "' not in outcome scope");
  return scope.decode(index)[static_cast<std::size_t>(i)];
}

Outcome make_outcome(const Scope& scope, const std::map<std::string, std::string>& assignment) {
  if (assignment.size() != scope.num_vars())
    throw InvalidOutcome("assignment does not cover scope " + scope.str());
  std::vector<std::size_t> digits;
  for (const auto& v : scope.vars()) {
    auto it = assignment.find(v.id);
    if (it == assignment.end()) throw InvalidOutcome("no value for variable '" + v.id + "'");
    auto pos = std::find(v.outcomes.begin(), v.outcomes.end(), it->second);
    if (pos == v.outcomes.end())
      throw InvalidOutcome("'" + it->second + "' is not an outcome of '" + v.id + "'");
    digits.push_back(static_cast<std::size_t>(pos - v.outcomes.begin()));
  }
  return Outcome{scope, scope.encode(digits)};
}

std::vector<std::size_t> restriction_map(const Scope& from, const Scope& to) {
  if (!to.is_subset_of(from)) throw ScopeError("scope " + to.str() + " is not contained in " + from.str());
  std::vector<std::size_t> positions;
  for (const auto& v : to.vars()) positions.push_back(static_cast<std::size_t>(from.index_of(v.id)));
  std::vector<std::size_t> map(from.size());
  std::vector<std::size_t> sub(to.num_vars());
  for (std::size_t i = 0; i < from.size(); ++i) {
    const auto digits = from.decode(i);
    for (std::size_t k = 0; k < positions.size(); ++k) sub[k] = digits[positions[k]];
    map[i] = to.encode(sub);
  }
  return map;
}

Gamble::Gamble(Scope scope, Vector values) : scope_(std::move(scope)), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.size()) != scope_.size())
    throw DimensionError("gamble has " + std::to_string(values_.size()) + " values but scope " +
                         scope_.str() + " has " + std::to_string(scope_.size()) + " outcomes");
}

Gamble Gamble::constant(const Scope& scope, const Rational& value) {
  return Gamble(scope, Vector::Constant(static_cast<Eigen::Index>(scope.size()), value));
}

bool Gamble::is_constant() const {
  for (Eigen::Index i = 1; i < values_.size(); ++i)
    if (values_(i) != values_(0)) return false;
  return true;
}

Rational Gamble::min() const {
  Rational m = values_(0);
  for (Eigen::Index i = 1; i < values_.size(); ++i)
    if (values_(i) < m) m = values_(i);
  return m;
}

Rational Gamble::max() const {
  Rational m = values_(0);
  for (Eigen::Index i = 1; i < values_.size(); ++i)
    if (values_(i) > m) m = values_(i);
  return m;
}

Rational Gamble::dot(const Vector& mass) const {
  if (mass.size() != values_.size()) throw DimensionError("mass function size mismatch");
  return values_.dot(mass);
}

Gamble Gamble::operator+(const Gamble& other) const {
  if (!(scope_ == other.scope_)) throw ScopeError("adding gambles on different scopes");
  return Gamble(scope_, values_ + other.values_);
}

Gamble Gamble::operator-(const Gamble& other) const {
  if (!(scope_ == other.scope_)) throw ScopeError("subtracting gambles on different scopes");
  return Gamble(scope_, values_ - other.values_);
}

bool Gamble::operator==(const Gamble& other) const {
  return scope_ == other.scope_ && values_ == other.values_;
}

Gamble embed(const Gamble& g, const Scope& target) {
  const auto map = restriction_map(target, g.scope());
  Vector out(static_cast<Eigen::Index>(target.size()));
  for (std::size_t i = 0; i < map.size(); ++i) out(static_cast<Eigen::Index>(i)) = g[map[i]];
  return Gamble(target, std::move(out));
}

std::optional<Gamble> depends_only_on(const Gamble& g, const Scope& O) {
  const auto map = restriction_map(g.scope(), O);
  Vector reduced(static_cast<Eigen::Index>(O.size()));
  std::vector<bool> seen(O.size(), false);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto j = static_cast<Eigen::Index>(map[i]);
    if (!seen[map[i]]) {
      reduced(j) = g[i];
      seen[map[i]] = true;
    } else if (reduced(j) != g[i]) {
      return std::nullopt;
    }
  }
  return Gamble(O, std::move(reduced));
}

Gamble indicator(const Outcome& x) {
  if (x.index >= x.scope.size()) throw InvalidOutcome("outcome index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(x.scope.size()));
  v(static_cast<Eigen::Index>(x.index)) = 1;
  return Gamble(x.scope, std::move(v));
}

Gamble slice(const Gamble& g, const Outcome& x_I) {
  if (!x_I.scope.is_subset_of(g.scope()))
    throw ScopeError("slice scope " + x_I.scope.str() + " not in " + g.scope().str());
  const Scope rest = g.scope().minus(x_I.scope);
  const Matrix T = indicator_embedding_matrix(x_I, rest, g.scope());
  // T has exactly one unit entry per column; transpose picks the slice.
  return Gamble(rest, T.transpose() * g.values());
}

Gamble product(const Gamble& f, const Gamble& g) {
  const Scope joint = f.scope().unite(g.scope());
  const Gamble a = embed(f, joint);
  const Gamble b = embed(g, joint);
  return Gamble(joint, a.values().cwiseProduct(b.values()));
}

Matrix embedding_matrix(const Scope& from, const Scope& to) {
  const auto map = restriction_map(to, from);
  Matrix E = Matrix::Zero(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
  for (std::size_t i = 0; i < map.size(); ++i) E(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(map[i])) = 1;
  return E;
}

Matrix indicator_embedding_matrix(const Outcome& x_I, const Scope& rest, const Scope& target) {
  if (!x_I.scope.disjoint_from(rest)) throw ScopeError("conditioning scope overlaps the remaining scope");
  if (!x_I.scope.is_subset_of(target) || !rest.is_subset_of(target))
    throw ScopeError("scopes not contained in " + target.str());
  const auto to_I = restriction_map(target, x_I.scope);
  const auto to_rest = restriction_map(target, rest);
  Matrix T = Matrix::Zero(static_cast<Eigen::Index>(target.size()), static_cast<Eigen::Index>(rest.size()));
  for (std::size_t i = 0; i < target.size(); ++i)
    if (to_I[i] == x_I.index) T(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(to_rest[i])) = 1;
  return T;
}

}  // namespace sdg
