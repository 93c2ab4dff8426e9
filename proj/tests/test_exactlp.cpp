#include "check_property.hpp"
#include "helpers.hpp"

#include "sdg/error.hpp"
#include "sdg/exactlp.hpp"

using namespace sdg;
using namespace sdg::test;

namespace {

LinSystem system(std::size_t n, std::initializer_list<std::pair<std::initializer_list<Rational>, Rational>> ge) {
  LinSystem sys(n);
  for (const auto& [coeffs, rhs] : ge) sys.add(vec(coeffs), Relation::GreaterEq, rhs);
  return sys;
}

bool parallel(const Vector& a, const Vector& b) {
  // a = c·b for some c > 0.
  Eigen::Index i = 0;
  while (i < b.size() && b(i) == 0) ++i;
  if (i == b.size() || a(i) * b(i) <= 0) return false;
  return a * b(i) == b * a(i);
}

}  // namespace

TEST_SUITE("exactlp") {

TEST_CASE("bounded maximisation") {
  LinSystem sys = system(1, {{{-1}, -1}, {{1}, 0}});
  sys.maximize(vec({1}));
  const auto out = solve(sys);
  REQUIRE(std::holds_alternative<Optimal>(out));
  CHECK(std::get<Optimal>(out).value == 1);
  CHECK(std::get<Optimal>(out).witness == vec({1}));
}

TEST_CASE("infeasible system returns a verifying Farkas vector") {
  const LinSystem sys = system(1, {{{1}, 1}, {{-1}, 0}});
  const auto out = solve(sys);
  REQUIRE(std::holds_alternative<Infeasible>(out));
  const Vector& y = std::get<Infeasible>(out).farkas;
  CHECK(verify_farkas(sys, y));
  CHECK(parallel(y, vec({1, 1})));
}

TEST_CASE("unbounded maximisation returns a ray") {
  LinSystem sys(2);
  sys.add(vec({1, -1}), Relation::Equal);
  sys.add(vec({1, 0}), Relation::GreaterEq);
  sys.maximize(vec({1, 1}));
  const auto out = solve(sys);
  REQUIRE(std::holds_alternative<Unbounded>(out));
  const auto& u = std::get<Unbounded>(out);
  CHECK(verify_ray(sys, u.ray));
  CHECK(parallel(u.ray, vec({1, 1})));
}

TEST_CASE("feasibility without an objective") {
  const LinSystem sys = system(2, {{{1, 1}, 2}, {{1, -1}, 0}});
  const auto out = solve(sys);
  REQUIRE(std::holds_alternative<Feasible>(out));
  CHECK(satisfies(sys, std::get<Feasible>(out).witness));
}

TEST_CASE("sign-restricted variables") {
  LinSystem sys({"x", "y"}, {true, false});
  sys.add(vec({1, 1}), Relation::Equal, -3);
  sys.minimize(vec({1, 0}));
  const auto out = solve(sys);
  REQUIRE(std::holds_alternative<Optimal>(out));
  CHECK(std::get<Optimal>(out).value == 0);
  CHECK(std::get<Optimal>(out).witness(1) == -3);
}

TEST_CASE("dimension mismatches are errors") {
  LinSystem sys(2);
  CHECK_THROWS_AS(sys.add(vec({1}), Relation::GreaterEq), DimensionError);
  LinSystem strict(1);
  strict.add(vec({1}), Relation::Greater);
  CHECK_THROWS_AS(solve(strict), Error);
}

TEST_CASE("strict feasibility") {
  LinSystem open(1);
  open.add(vec({1}), Relation::Greater);
  open.add(vec({1}), Relation::GreaterEq, -1);
  const auto w = strict_feasible(open);
  REQUIRE(w);
  CHECK(satisfies(open, *w));

  LinSystem empty(1);
  empty.add(vec({1}), Relation::Greater);
  empty.add(vec({-1}), Relation::GreaterEq);
  CHECK_FALSE(strict_feasible(empty));
}

TEST_CASE("homogenised and slack reductions agree on a homogeneous cone") {
  LinSystem sys(2);
  sys.add(vec({1, -1}), Relation::Greater);
  sys.add(vec({0, 1}), Relation::GreaterEq);
  const auto a = strict_feasible_homogenized(sys), b = strict_feasible_slack(sys);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(satisfies(sys, *a));
  CHECK(satisfies(sys, *b));
  // Any witness scales along the cone.
  CHECK(satisfies(sys, *a * Rational(7)));
  CHECK(satisfies(sys, vec({1, 0})));
  CHECK_THROWS_AS(strict_feasible_homogenized(system(1, {{{1}, 1}})), Error);
}

TEST_CASE("eliminating a variable projects the polyhedron") {
  // x ≥ y, y ≥ 0  →  x ≥ 0
  const LinSystem sys = system(2, {{{1, -1}, 0}, {{0, 1}, 0}});
  const LinSystem p = fm_project(sys, {1});
  CHECK(p.num_vars() == 1);
  CHECK(satisfies(p, vec({0})));
  CHECK(satisfies(p, vec({5})));
  CHECK_FALSE(satisfies(p, vec({-1})));
}

TEST_CASE("eliminating the only variable leaves tautologies") {
  // 1 ≥ λ, −1 ≥ −λ, λ ≥ 0
  const LinSystem sys = system(1, {{{-1}, -1}, {{1}, 1}, {{1}, 0}});
  const LinSystem p = fm_project(sys, {0});
  CHECK(p.num_vars() == 0);
  for (const auto& r : p.rows) CHECK(r.rhs <= 0);
  CHECK(fm_feasible(sys));
}

TEST_CASE("projecting away nothing keeps the system") {
  const LinSystem sys = system(2, {{{1, 2}, 3}, {{-1, 0}, -4}});
  const LinSystem p = fm_project(sys, {});
  REQUIRE(p.rows.size() == sys.rows.size());
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    CHECK(p.rows[i].coeffs == sys.rows[i].coeffs);
    CHECK(p.rows[i].rhs == sys.rows[i].rhs);
  }
}

TEST_CASE("elimination is guarded by its budget") {
  LinSystem sys(3);
  Rng rng(5);
  for (int i = 0; i < 40; ++i) sys.add(random_vector(rng, 3, -3, 3), Relation::GreaterEq, Rational(rng.range(-3, 3)));
  FmLimits tight;
  tight.max_rows = 10;
  CHECK_THROWS_AS(fm_project(sys, {0, 1, 2}, tight), BudgetExceeded);
  FmLimits narrow;
  narrow.max_vars = 2;
  CHECK_THROWS_AS(fm_project(sys, {0}, narrow), BudgetExceeded);
}

TEST_CASE("strict rows survive elimination") {
  // x > y, y ≥ 1, 1 ≥ x has no solution; x > y, y ≥ 1, 2 ≥ x does.
  LinSystem sys(2);
  sys.add(vec({1, -1}), Relation::Greater);
  sys.add(vec({0, 1}), Relation::GreaterEq, 1);
  LinSystem tight = sys, loose = sys;
  tight.add(vec({-1, 0}), Relation::GreaterEq, -1);
  loose.add(vec({-1, 0}), Relation::GreaterEq, -2);
  CHECK_FALSE(fm_feasible(tight));
  CHECK_FALSE(strict_feasible(tight));
  CHECK(fm_feasible(loose));
  CHECK(strict_feasible(loose));
}

TEST_CASE("LP answers verify by substitution") { CHECK_PROPERTY(prop_lp_answers_verify); }

TEST_CASE("strict feasibility agrees with elimination") { CHECK_PROPERTY(prop_strict_feasible_matches_elimination); }

TEST_CASE("certificates are mutually exclusive") { CHECK_PROPERTY(prop_certificate_exclusivity); }

}  // TEST_SUITE
