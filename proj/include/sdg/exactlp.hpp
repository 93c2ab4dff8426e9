// Exact linear programming over rationals: feasibility with certificates,
// optimisation, strict-inequality systems and Fourier–Motzkin projection.
#ifndef SDG_EXACTLP_HPP
#define SDG_EXACTLP_HPP

#include "sdg/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sdg {

enum class Relation { GreaterEq, Equal, Greater };

std::string to_string(Relation rel);

/// coeffs · x  rel  rhs
struct LinRow {
  Vector coeffs;
  Rational rhs;
  Relation rel = Relation::GreaterEq;
};

enum class Sense { Maximize, Minimize };

struct Objective {
  Vector coeffs;
  Sense sense = Sense::Maximize;
};

struct LinSystem {
  std::vector<std::string> var_names;
  /// Per-variable sign restriction x_j ≥ 0. Empty means every variable is free.
  std::vector<bool> nonneg;
  std::vector<LinRow> rows;
  std::optional<Objective> objective;

  LinSystem() = default;
  explicit LinSystem(std::size_t num_vars);
  LinSystem(std::vector<std::string> names, std::vector<bool> nonneg_flags = {});

  std::size_t num_vars() const { return var_names.size(); }
  bool is_nonneg(std::size_t j) const { return !nonneg.empty() && nonneg[j]; }
  bool has_strict() const;
  bool is_homogeneous() const;

  void add(Vector coeffs, Relation rel, Rational rhs = 0);
  void maximize(Vector coeffs) { objective = Objective{std::move(coeffs), Sense::Maximize}; }
  void minimize(Vector coeffs) { objective = Objective{std::move(coeffs), Sense::Minimize}; }

  /// Throws DimensionError when a row or the objective has the wrong length.
  void validate() const;
};

struct Feasible {
  Vector witness;
};

/// y ≥ 0 on inequality rows with Σ y_i a_i ≤ 0 on sign-restricted variables,
/// = 0 on free ones, and y·b = 1: every feasible x would give 0 ≥ y·A x ≥ 1.
struct Infeasible {
  Vector farkas;
};

struct Optimal {
  Rational value;
  Vector witness;
};

/// A feasible point plus a direction along which the objective improves forever.
struct Unbounded {
  Vector ray;
  Vector witness;
};

using LPOutcome = std::variant<Feasible, Infeasible, Optimal, Unbounded>;

/// Exact two-phase simplex. Strict rows are rejected; use strict_feasible.
/// Every answer is verified by substitution before it is returned.
LPOutcome solve(const LinSystem& sys);

bool satisfies(const LinSystem& sys, const Vector& x);
/// Like satisfies, but reads strict rows as weak.
bool satisfies_closure(const LinSystem& sys, const Vector& x);
bool verify_farkas(const LinSystem& sys, const Vector& y);
bool verify_ray(const LinSystem& sys, const Vector& ray);

/// Decides nonemptiness of a system that may contain strict rows, returning an
/// exact point satisfying every row. Homogeneous systems are homogenised
/// (> 0 becomes ≥ 1), others go through slack maximisation.
std::optional<Vector> strict_feasible(const LinSystem& sys);
std::optional<Vector> strict_feasible_homogenized(const LinSystem& sys);
std::optional<Vector> strict_feasible_slack(const LinSystem& sys);

struct FmLimits {
  std::size_t max_rows = 4000;
  std::size_t max_vars = 16;
};

/// Eliminates the listed variables. The result is over the remaining variables
/// in their original order, with sign restrictions turned into explicit rows.
LinSystem fm_project(const LinSystem& sys, const std::vector<std::size_t>& eliminate,
                     const FmLimits& limits = {});

/// Emptiness by full elimination; an oracle for cross-checking LP answers.
bool fm_feasible(const LinSystem& sys, const FmLimits& limits = {});

}  // namespace sdg

#endif  // SDG_EXACTLP_HPP
