#include "sdg/exactlp.hpp"

#include "sdg/error.hpp"
#include "sdg/simplex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sdg {

std::string to_string(Relation rel) {
  switch (rel) {
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
  }
  return "?";
}

LinSystem::LinSystem(std::size_t num_vars) {
  for (std::size_t j = 0; j < num_vars; ++j) var_names.push_back("x" + std::to_string(j));
}

LinSystem::LinSystem(std::vector<std::string> names, std::vector<bool> nonneg_flags)
    : var_names(std::move(names)), nonneg(std::move(nonneg_flags)) {
  if (!nonneg.empty() && nonneg.size() != var_names.size())
    throw DimensionError("sign-restriction flags do not match variable count");
}

bool LinSystem::has_strict() const {
  for (const auto& r : rows)
    if (r.rel == Relation::Greater) return true;
  return false;
}

bool LinSystem::is_homogeneous() const {
  for (const auto& r : rows)
    if (r.rhs != 0) return false;
  return true;
}

void LinSystem::add(Vector coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != static_cast<Eigen::Index>(num_vars()))
    throw DimensionError("row has " + std::to_string(coeffs.size()) + " coefficients, system has " +
                         std::to_string(num_vars()));
  rows.push_back(LinRow{std::move(coeffs), std::move(rhs), rel});
}

void LinSystem::validate() const {
  const auto n = static_cast<Eigen::Index>(num_vars());
  if (!nonneg.empty() && nonneg.size() != num_vars())
    throw DimensionError("sign-restriction flags do not match variable count");
  for (const auto& r : rows)
    if (r.coeffs.size() != n)
      throw DimensionError("row has " + std::to_string(r.coeffs.size()) + " coefficients, system has " +
                           std::to_string(n) + " variables");
  if (objective && objective->coeffs.size() != n) throw DimensionError("objective length mismatch");
}

namespace {

bool row_holds(const LinRow& r, const Vector& x, bool closure) {
  const Rational lhs = r.coeffs.dot(x);
  switch (r.rel) {
    case Relation::GreaterEq: return lhs >= r.rhs;
    case Relation::Equal: return lhs == r.rhs;
    case Relation::Greater: return closure ? lhs >= r.rhs : lhs > r.rhs;
  }
  return false;
}

bool check_point(const LinSystem& sys, const Vector& x, bool closure) {
  if (static_cast<std::size_t>(x.size()) != sys.num_vars()) return false;
  for (std::size_t j = 0; j < sys.num_vars(); ++j)
    if (sys.is_nonneg(j) && x(static_cast<Eigen::Index>(j)) < 0) return false;
  for (const auto& r : sys.rows)
    if (!row_holds(r, x, closure)) return false;
  return true;
}

}  // namespace

bool satisfies(const LinSystem& sys, const Vector& x) { return check_point(sys, x, false); }

bool satisfies_closure(const LinSystem& sys, const Vector& x) { return check_point(sys, x, true); }

bool verify_farkas(const LinSystem& sys, const Vector& y) {
  if (static_cast<std::size_t>(y.size()) != sys.rows.size()) return false;
  Vector combo = Vector::Zero(static_cast<Eigen::Index>(sys.num_vars()));
  Rational rhs = 0;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& r = sys.rows[i];
    const Rational& yi = y(static_cast<Eigen::Index>(i));
    if (r.rel != Relation::Equal && yi < 0) return false;
    if (r.rel == Relation::Greater) return false;  // strict rows are outside this certificate's scope
    if (yi == 0) continue;
    combo += yi * r.coeffs;
    rhs += yi * r.rhs;
  }
  for (std::size_t j = 0; j < sys.num_vars(); ++j) {
    const Rational& c = combo(static_cast<Eigen::Index>(j));
    if (sys.is_nonneg(j) ? c > 0 : c != 0) return false;
  }
  return rhs > 0;
}

bool verify_ray(const LinSystem& sys, const Vector& ray) {
  if (!sys.objective || static_cast<std::size_t>(ray.size()) != sys.num_vars()) return false;
  for (std::size_t j = 0; j < sys.num_vars(); ++j)
    if (sys.is_nonneg(j) && ray(static_cast<Eigen::Index>(j)) < 0) return false;
  for (const auto& r : sys.rows) {
    const Rational lhs = r.coeffs.dot(ray);
    if (r.rel == Relation::Equal ? lhs != 0 : lhs < 0) return false;
  }
  const Rational gain = sys.objective->coeffs.dot(ray);
  return sys.objective->sense == Sense::Maximize ? gain > 0 : gain < 0;
}

LPOutcome solve(const LinSystem& sys) {
  sys.validate();
  if (sys.has_strict()) throw Error("solve() received a strict row; use strict_feasible()");

  const std::size_t n = sys.num_vars();
  // Standard-form column layout: one column per sign-restricted variable, two
  // (positive and negative part) per free variable, then one slack per ≥ row.
  std::vector<Eigen::Index> pos_col(n), neg_col(n, -1);
  Eigen::Index cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (!sys.is_nonneg(j)) neg_col[j] = cols++;
  }
  const Eigen::Index structural = cols;
  for (const auto& r : sys.rows)
    if (r.rel == Relation::GreaterEq) ++cols;

  const auto m = static_cast<Eigen::Index>(sys.rows.size());
  Matrix A = Matrix::Zero(m, cols);
  Vector b(m);
  std::vector<int> flip(static_cast<std::size_t>(m), 1);
  Eigen::Index slack = structural;
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& r = sys.rows[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = r.coeffs(static_cast<Eigen::Index>(j));
      if (a == 0) continue;
      A(i, pos_col[j]) = a;
      if (neg_col[j] >= 0) A(i, neg_col[j]) = -a;
    }
    if (r.rel == Relation::GreaterEq) A(i, slack++) = -1;
    b(i) = r.rhs;
    if (b(i) < 0) {
      A.row(i) = -A.row(i);
      b(i) = -b(i);
      flip[static_cast<std::size_t>(i)] = -1;
    }
  }

  std::optional<Vector> cost;
  if (sys.objective) {
    Vector c = Vector::Zero(cols);
    const Rational s = sys.objective->sense == Sense::Maximize ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = sys.objective->coeffs(static_cast<Eigen::Index>(j));
      if (a == 0) continue;
      c(pos_col[j]) = s * a;
      if (neg_col[j] >= 0) c(neg_col[j]) = -s * a;
    }
    cost = std::move(c);
  }

  const auto res = DenseSimplex<Rational>::solve(A, b, cost);

  auto recover = [&](const Vector& z) {
    Vector x(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
      x(static_cast<Eigen::Index>(j)) = z(pos_col[j]);
      if (neg_col[j] >= 0) x(static_cast<Eigen::Index>(j)) -= z(neg_col[j]);
    }
    return x;
  };

  using Status = StandardFormResult<Rational>::Status;
  switch (res.status) {
    case Status::Infeasible: {
      Vector y(m);
      Rational yb = 0;
      for (Eigen::Index i = 0; i < m; ++i) {
        y(i) = res.farkas(i) * flip[static_cast<std::size_t>(i)];
        yb += y(i) * sys.rows[static_cast<std::size_t>(i)].rhs;
      }
      y /= yb;
      if (!verify_farkas(sys, y)) throw EngineBug("Farkas certificate failed verification");
      return Infeasible{std::move(y)};
    }
    case Status::Unbounded: {
      Vector x = recover(res.x);
      Vector ray = recover(res.ray);
      if (!satisfies(sys, x) || !verify_ray(sys, ray)) throw EngineBug("unbounded ray failed verification");
      return Unbounded{std::move(ray), std::move(x)};
    }
    case Status::Optimal: {
      Vector x = recover(res.x);
      if (!satisfies(sys, x)) throw EngineBug("LP witness failed verification");
      if (!sys.objective) return Feasible{std::move(x)};
      Rational value = sys.objective->coeffs.dot(x);
      return Optimal{std::move(value), std::move(x)};
    }
  }
  throw EngineBug("unreachable simplex status");
}

std::optional<Vector> strict_feasible_homogenized(const LinSystem& sys) {
  sys.validate();
  if (!sys.is_homogeneous()) throw Error("homogenisation needs a homogeneous system");
  LinSystem weak = sys;
  weak.objective.reset();
  for (auto& r : weak.rows)
    if (r.rel == Relation::Greater) {
      r.rel = Relation::GreaterEq;
      r.rhs = 1;
    }
  const auto out = solve(weak);
  if (const auto* f = std::get_if<Feasible>(&out)) {
    if (!satisfies(sys, f->witness)) throw EngineBug("homogenised witness is not interior");
    return f->witness;
  }
  return std::nullopt;
}

std::optional<Vector> strict_feasible_slack(const LinSystem& sys) {
  sys.validate();
  const std::size_t n = sys.num_vars();
  LinSystem ext = sys;
  ext.objective.reset();
  ext.var_names.push_back("_eps");
  if (ext.nonneg.empty()) ext.nonneg.assign(n, false);
  ext.nonneg.push_back(true);
  for (auto& r : ext.rows) {
    Vector c(static_cast<Eigen::Index>(n + 1));
    c.head(static_cast<Eigen::Index>(n)) = r.coeffs;
    c(static_cast<Eigen::Index>(n)) = r.rel == Relation::Greater ? Rational(-1) : Rational(0);
    if (r.rel == Relation::Greater) r.rel = Relation::GreaterEq;
    r.coeffs = std::move(c);
  }
  Vector cap = Vector::Zero(static_cast<Eigen::Index>(n + 1));
  cap(static_cast<Eigen::Index>(n)) = -1;
  ext.add(cap, Relation::GreaterEq, -1);
  ext.maximize(-cap);

  const auto out = solve(ext);
  const auto* opt = std::get_if<Optimal>(&out);
  if (!opt || opt->value <= 0) return std::nullopt;
  Vector x = opt->witness.head(static_cast<Eigen::Index>(n));
  if (!satisfies(sys, x)) throw EngineBug("slack witness is not interior");
  return x;
}

std::optional<Vector> strict_feasible(const LinSystem& sys) {
  if (!sys.has_strict()) {
    LinSystem plain = sys;
    plain.objective.reset();
    const auto out = solve(plain);
    if (const auto* f = std::get_if<Feasible>(&out)) return f->witness;
    return std::nullopt;
  }
  return sys.is_homogeneous() ? strict_feasible_homogenized(sys) : strict_feasible_slack(sys);
}

namespace {

struct FmRow {
  Vector a;
  Rational b;
  Relation rel;
};

// Positive rescaling so the first nonzero coefficient has magnitude one; used
// to recognise duplicate rows.
std::string row_key(FmRow& r) {
  Rational lead = 0;
  for (Eigen::Index j = 0; j < r.a.size(); ++j)
    if (r.a(j) != 0) {
      lead = abs(r.a(j));
      break;
    }
  if (lead != 0 && lead != 1) {
    r.a /= lead;
    r.b /= lead;
  }
  return to_string(r.a) + to_string(r.rel) + to_string(r.b);
}

bool tautology(const FmRow& r) {
  if (!is_zero_vector(r.a)) return false;
  switch (r.rel) {
    case Relation::GreaterEq: return r.b <= 0;
    case Relation::Greater: return r.b < 0;
    case Relation::Equal: return r.b == 0;
  }
  return false;
}

void push_unique(std::vector<FmRow>& rows, std::set<std::string>& seen, FmRow r) {
  if (tautology(r)) return;
  if (seen.insert(row_key(r)).second) rows.push_back(std::move(r));
}

}  // namespace

LinSystem fm_project(const LinSystem& sys, const std::vector<std::size_t>& eliminate, const FmLimits& limits) {
  sys.validate();
  const std::size_t n = sys.num_vars();
  if (n > limits.max_vars) throw BudgetExceeded("Fourier-Motzkin: too many variables");

  std::vector<FmRow> rows;
  std::set<std::string> seen;
  for (const auto& r : sys.rows) push_unique(rows, seen, FmRow{r.coeffs, r.rhs, r.rel});
  for (std::size_t j = 0; j < n; ++j)
    if (sys.is_nonneg(j)) {
      Vector e = Vector::Zero(static_cast<Eigen::Index>(n));
      e(static_cast<Eigen::Index>(j)) = 1;
      push_unique(rows, seen, FmRow{e, 0, Relation::GreaterEq});
    }

  std::set<std::size_t> gone(eliminate.begin(), eliminate.end());
  for (std::size_t k : gone) {
    if (k >= n) throw DimensionError("elimination index out of range");
    const auto kk = static_cast<Eigen::Index>(k);
    std::vector<FmRow> next;
    std::set<std::string> next_seen;

    auto eq = std::find_if(rows.begin(), rows.end(),
                           [&](const FmRow& r) { return r.rel == Relation::Equal && r.a(kk) != 0; });
    if (eq != rows.end()) {
      const FmRow pivot = *eq;
      for (auto it = rows.begin(); it != rows.end(); ++it) {
        if (it == eq) continue;
        FmRow r = *it;
        if (r.a(kk) != 0) {
          const Rational f = r.a(kk) / pivot.a(kk);
          r.a -= f * pivot.a;
          r.b -= f * pivot.b;
        }
        push_unique(next, next_seen, std::move(r));
      }
    } else {
      std::vector<const FmRow*> pos, neg;
      for (const auto& r : rows) {
        if (r.a(kk) > 0)
          pos.push_back(&r);
        else if (r.a(kk) < 0)
          neg.push_back(&r);
        else
          push_unique(next, next_seen, r);
      }
      if (next.size() + pos.size() * neg.size() > limits.max_rows)
        throw BudgetExceeded("Fourier-Motzkin: row budget exceeded");
      for (const FmRow* p : pos)
        for (const FmRow* q : neg) {
          const Rational sp = 1 / p->a(kk);
          const Rational sq = -1 / q->a(kk);
          FmRow r{sp * p->a + sq * q->a, sp * p->b + sq * q->b,
                  (p->rel == Relation::Greater || q->rel == Relation::Greater) ? Relation::Greater
                                                                                : Relation::GreaterEq};
          r.a(kk) = 0;
          push_unique(next, next_seen, std::move(r));
        }
    }
    rows = std::move(next);
  }

  std::vector<std::size_t> kept;
  LinSystem out;
  for (std::size_t j = 0; j < n; ++j)
    if (!gone.count(j)) {
      kept.push_back(j);
      out.var_names.push_back(sys.var_names[j]);
    }
  for (const auto& r : rows) {
    Vector a(static_cast<Eigen::Index>(kept.size()));
    for (std::size_t t = 0; t < kept.size(); ++t) a(static_cast<Eigen::Index>(t)) = r.a(static_cast<Eigen::Index>(kept[t]));
    out.add(std::move(a), r.rel, r.b);
  }
  return out;
}

bool fm_feasible(const LinSystem& sys, const FmLimits& limits) {
  std::vector<std::size_t> all(sys.num_vars());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  const LinSystem rest = fm_project(sys, all, limits);
  for (const auto& r : rest.rows) {
    const bool ok = r.rel == Relation::GreaterEq ? 0 >= r.rhs : r.rel == Relation::Greater ? 0 > r.rhs : r.rhs == 0;
    if (!ok) return false;
  }
  return true;
}

}  // namespace sdg
