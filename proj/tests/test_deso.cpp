#include "check_property.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include "sdg/deso.hpp"
#include "sdg/error.hpp"
#include "sdg/fixtures.hpp"

using namespace sdg;
using namespace sdg::test;

namespace {

const Scope X = ab("X");

GeneratorSet gens(std::initializer_list<std::initializer_list<Rational>> gs) {
  std::vector<Gamble> out;
  for (const auto& g : gs) out.push_back(gamble(X, g));
  return GeneratorSet(X, out);
}

}  // namespace

TEST_SUITE("deso") {

TEST_CASE("opposite gambles do not avoid non-positivity") {
  const AnpResult r = avoids_nonpositivity(gens({{1, -1}, {-1, 1}}));
  CHECK_FALSE(r.avoids);
  REQUIRE(r.lambda);
  CHECK(*r.lambda == vec({q(1, 2), q(1, 2)}));
  CHECK_FALSE(r.certificate);
}

TEST_CASE("a single generator has a positive certificate") {
  const AnpResult r = avoids_nonpositivity(gens({{1, -1}}));
  CHECK(r.avoids);
  REQUIRE(r.certificate);
  const Vector& p = *r.certificate;
  CHECK(p(0) > q(1, 2));
  CHECK(p(1) > 0);
  CHECK(gamble(X, {1, -1}).dot(p) > 0);
  // Any mass above one half on a works, for instance (3/4, 1/4).
  CHECK(gamble(X, {1, -1}).dot(vec({q(3, 4), q(1, 4)})) == q(1, 2));
}

TEST_CASE("the empty assessment avoids non-positivity") {
  const AnpResult r = avoids_nonpositivity(gens({}));
  CHECK(r.avoids);
  REQUIRE(r.certificate);
  CHECK(is_mass_function(*r.certificate));
}

TEST_CASE("zero generators are screened out") { CHECK_THROWS_AS(gens({{0, 0}}), Error); }

TEST_CASE("natural extension membership") {
  const GeneratorSet A = gens({{1, -1}});
  CHECK(natext_member(A, gamble(X, {2, -2})));
  CHECK_FALSE(natext_member(A, gamble(X, {0, -1})));
  CHECK(oracle::natext_fm(A.vectors(), vec({0, -1})) == false);
  CHECK(natext_member(A, gamble(X, {1, 0})));
  CHECK_FALSE(natext_member(A, gamble(X, {0, 0})));
  CHECK_FALSE(natext_member(A, gamble(X, {-1, 1})));
  CHECK_THROWS_AS(natext_member(gens({{1, -1}, {-1, 1}}), gamble(X, {1, 0})), IncoherentBase);
}

TEST_CASE("the empty assessment extends to the positive gambles") {
  const GeneratorSet A = gens({});
  for (const auto& v : oracle::grid(2, -2, 2)) CHECK(natext_member(A, Gamble(X, v)) == (all_nonnegative(v) && !is_zero_vector(v)));
}

TEST_CASE("dispatcher basics") {
  const fixtures::CredalPair P = fixtures::credal_pair();
  const std::vector<DesirableSetExpr> sets{
      DesirableSetExpr::generators(gens({{1, -1}})),
      DesirableSetExpr::cells(strictly_desirable(CredalSet(X, {vec({q(1, 3), q(2, 3)})}))),
      DesirableSetExpr::lex(LexSystem(X, {vec({q(1, 2), q(1, 2)}), vec({1, 0})})),
  };
  for (const auto& E : sets) {
    CHECK(member(E, Gamble::zero(X)) == Tri::Out);
    CHECK(member(E, gamble(X, {0, 1})) == Tri::In);
    CHECK(member(E, gamble(X, {-1, -1})) == Tri::Out);
  }
  CHECK(member(P.refined, P.g) == Tri::In);
  CHECK(member(P.strict, P.g) == Tri::Out);
  CHECK_THROWS_AS(member(sets[0], Gamble::zero(ab("Y"))), ScopeError);
}

TEST_CASE("strict preference") {
  const auto E = DesirableSetExpr::generators(gens({{1, -1}}));
  const Gamble f = gamble(X, {2, 0}), g = gamble(X, {1, 0}), h = gamble(X, {-3, 5});
  CHECK_FALSE(strictly_prefers(E, f, f));
  CHECK(strictly_prefers(E, f, g));
  CHECK(strictly_prefers(E, gamble(X, {1, 1}), gamble(X, {0, 2})));
  for (const Rational mu : {q(1, 4), q(1, 2), q(1)})
    CHECK(strictly_prefers(E, mu * f + (1 - mu) * h, mu * g + (1 - mu) * h));
}

TEST_CASE("audit of a strictly desirable set is structural") {
  const CellSet C = strictly_desirable(CredalSet(X, {vec({q(2, 5), q(3, 5)}), vec({q(1, 2), q(1, 2)})}));
  const AuditReport r = cellset_coherence_audit(C);
  CHECK(r.pass());
  CHECK(r.d1.method == "exact");
  CHECK(r.d2.method == "exact");
  CHECK(r.d3.method == "structural");
}

TEST_CASE("a closed half-space contains zero") {
  CellSpec half;
  half.rows = {CellRow{vec({1, 0}), Relation::GreaterEq}};
  const AuditReport r = cellset_coherence_audit(CellSet(X, {half}, false));
  CHECK_FALSE(r.d1.pass);
  REQUIRE(r.d1.counterexample);
  CHECK(r.d1.counterexample->is_zero());
  CHECK_FALSE(r.pass());
}

TEST_CASE("audit finds positive gambles a cell set misses") {
  CellSpec upper;
  upper.rows = {CellRow{vec({1, 0}), Relation::Greater}};
  const AuditReport r = cellset_coherence_audit(CellSet(X, {upper}, false));
  CHECK(r.d1.pass);
  CHECK_FALSE(r.d2.pass);
  CHECK(r.d2.method == "exact");
  REQUIRE(r.d2.counterexample);
  CHECK(r.d2.counterexample->is_positive());
}

TEST_CASE("the refined credal pair set passes its audit") {
  const fixtures::CredalPair P = fixtures::credal_pair();
  const AuditReport r = cellset_coherence_audit(*P.refined.as_cells());
  CHECK(r.pass());
  CHECK(r.d3.method == "sampled");
}

TEST_CASE("audit refutes an unclosed union by sampling") {
  // {f(a) > 0} ∪ {f(b) > 0} is not closed under sums: (1,−1) + (−1,1) = 0.
  CellSpec d1, d2;
  d1.rows = {CellRow{vec({1, 0}), Relation::Greater}};
  d2.rows = {CellRow{vec({0, 1}), Relation::Greater}};
  const AuditReport r = cellset_coherence_audit(CellSet(X, {d1, d2}, true));
  CHECK(r.d1.pass);
  CHECK(r.d2.pass);
  CHECK_FALSE(r.d3.pass);
  CHECK(r.d3.method == "sampled");
  REQUIRE(r.d3.counterexample);
}

TEST_CASE("lex audits") {
  CHECK(lex_coherence_audit(LexSystem(X, {vec({q(1, 2), q(1, 2)}), vec({1, 0})})).pass());
  const AuditReport partial = lex_coherence_audit(LexSystem(var("Y", 3), {vec({1, 0, 0}), vec({0, 1, 0})}));
  CHECK_FALSE(partial.d2.pass);
  REQUIRE(partial.d2.counterexample);
  CHECK(*partial.d2.counterexample == gamble(var("Y", 3), {0, 0, 1}));
}

TEST_CASE("sampled audit of an expression") {
  const auto E = DesirableSetExpr::generators(GeneratorSet(ab("X1").unite(ab("X2")),
                                                           {gamble(ab("X1").unite(ab("X2")), {1, -1, 2, -1})}));
  SampleConfig cfg;
  cfg.cap = 200;
  const AuditReport r = sampled_coherence_audit(E, cfg);
  CHECK(r.pass());
  CHECK(r.d3.method == "sampled");
  CHECK_FALSE(r.str().empty());
}

TEST_CASE("coherence equivalences") { CHECK_PROPERTY(prop_coherence_equivalences); }
TEST_CASE("nonpositive gambles are never desirable") { CHECK_PROPERTY(prop_nonpositive_rejected); }
TEST_CASE("a rejected gamble's negation can be added") { CHECK_PROPERTY(prop_rejected_gamble_extends); }
TEST_CASE("preference axioms") { CHECK_PROPERTY(prop_preference_axioms); }
TEST_CASE("maximal supersets contain the natural extension") { CHECK_PROPERTY(prop_lex_superset_contains_extension); }
TEST_CASE("the empty marginal is the positive constants") { CHECK_PROPERTY(prop_empty_marginal_positive_constants); }
TEST_CASE("membership matches elimination") { CHECK_PROPERTY(prop_natext_matches_elimination); }

}  // TEST_SUITE
