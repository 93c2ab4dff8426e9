#include "check_property.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include "sdg/error.hpp"
#include "sdg/fixtures.hpp"
#include "sdg/previsions.hpp"

#include <algorithm>

using namespace sdg;
using namespace sdg::test;

namespace {

const Scope X1 = fixtures::binary("X1"), X2 = fixtures::binary("X2");
const Scope J = X1.unite(X2);

DesirableSetExpr gens(const Scope& s, std::vector<Gamble> g) {
  return DesirableSetExpr::generators(GeneratorSet(s, std::move(g)));
}

bool same_points(std::vector<Vector> a, std::vector<Vector> b) {
  auto less = [](const Vector& x, const Vector& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

CredalSet uniform(const Scope& s) {
  return CredalSet(s, {Vector::Constant(idx(s.size()), Rational(1, static_cast<long>(s.size())))});
}

}  // namespace

TEST_SUITE("previsions") {

TEST_CASE("lower prevision of a single generator") {
  const auto E = gens(X1, {gamble(X1, {1, -1})});
  CHECK(lower_prevision(E, gamble(X1, {0, 2})) == 0);
  CHECK(upper_prevision(E, gamble(X1, {0, 2})) == 1);
  CHECK(lower_prevision(E, gamble(X1, {2, 0})) == 1);
  for (const auto& v : oracle::grid(2, -3, 3)) CHECK(lower_prevision(E, Gamble(X1, v)) == std::min(v(0), (v(0) + v(1)) / 2));
}

TEST_CASE("lower prevision of constants") {
  const fixtures::CredalPair P = fixtures::credal_pair();
  for (const Rational c : {q(-5, 2), q(0), q(7, 3)}) {
    CHECK(lower_prevision(P.strict, Gamble::constant(P.joint, c)) == c);
    CHECK(lower_prevision(gens(X1, {}), Gamble::constant(X1, c)) == c);
  }
}

TEST_CASE("the credal pair induces one lower prevision") {
  const fixtures::CredalPair P = fixtures::credal_pair();
  for (const auto& v : oracle::grid(4, -1, 1)) {
    const Gamble f(P.joint, v);
    const Rational expect = std::min((v(2) + v(3)) / 2, (v(2) + 3 * v(3)) / 4);
    CHECK(lower_prevision(P.strict, f) == expect);
    CHECK(lower_prevision(P.refined, f) == expect);
  }
  const PrevisionValue d = lower_prevision_detail(P.strict, gamble(P.joint, {0, 0, 2, 2}));
  CHECK(d.value == 2);
}

TEST_CASE("incoherent sets have no lower prevision") {
  CHECK_THROWS_AS(lower_prevision(gens(X1, {gamble(X1, {-1, -1})}), gamble(X1, {0, 0})), IncoherentBase);
}

TEST_CASE("conditional lower previsions on a null outcome") {
  const fixtures::CredalPair P = fixtures::credal_pair();
  const Outcome a = make_outcome(P.joint.select({"X1"}), {{"X1", "a"}});
  const Scope Y = P.joint.select({"X2"});
  for (const auto& v : oracle::grid(2, -3, 3)) {
    const Gamble g(Y, v);
    CHECK(conditional_lower_prevision(P.strict, a, g) == std::min(v(0), v(1)));
    CHECK(conditional_lower_prevision(P.refined, a, g) == (v(0) + v(1)) / 2);
  }
}

TEST_CASE("generalised Bayes residuals vanish") {
  const fixtures::CredalPair P = fixtures::credal_pair();
  const Outcome a = make_outcome(P.joint.select({"X1"}), {{"X1", "a"}});
  const Scope Y = P.joint.select({"X2"});
  CHECK(gbr_residual(P.refined, a, gamble(Y, {1, 0})) == 0);
  CHECK(gbr_residual(P.strict, a, gamble(Y, {1, 0})) == 0);
  const auto precise = DesirableSetExpr::cells(strictly_desirable(uniform(J)));
  const Outcome x1 = make_outcome(X1, {{"X1", "1"}});
  CHECK(conditional_lower_prevision(precise, x1, gamble(X2, {3, 1})) == 2);
  CHECK(gbr_residual(precise, x1, gamble(X2, {3, 1})) == 0);
  CHECK(gbr_residual(gens(J, {}), x1, gamble(X2, {3, -1})) == 0);
}

TEST_CASE("credal vertices of generator sets") {
  CHECK(same_points(credal_vertices(GeneratorSet(X1, {})).vertices(), {vec({1, 0}), vec({0, 1})}));
  CHECK(same_points(credal_vertices(GeneratorSet(X1, {gamble(X1, {1, -1})})).vertices(),
                    {vec({1, 0}), vec({q(1, 2), q(1, 2)})}));
  const std::vector<Vector> g = {vec({1, -2, 1}), vec({-1, 0, 3})};
  const Scope Y = var("Y", 3);
  const CredalSet C = credal_vertices(GeneratorSet(Y, {Gamble(Y, g[0]), Gamble(Y, g[1])}));
  CHECK(same_points(C.vertices(), CredalSet(Y, oracle::credal_points(3, g)).vertices()));
  CHECK_THROWS_AS(credal_vertices(GeneratorSet(X1, {gamble(X1, {-1, 0})})), IncoherentBase);
}

TEST_CASE("credal view of derived sets") {
  const CredalSet C = fixtures::two_vertex_binary(X1);
  CHECK(same_points(credal_view(DesirableSetExpr::cells(strictly_desirable(C))).vertices(), C.vertices()));
  CHECK(same_points(credal_view(DesirableSetExpr::lex(fixtures::uniform_then_first(X1))).vertices(),
                    {vec({q(1, 2), q(1, 2)})}));
}

TEST_CASE("strictly desirable gambles of a precise model") {
  const auto D = DesirableSetExpr::cells(strictly_desirable(uniform(X1)));
  CHECK(D.member(gamble(X1, {1, -1})) == Tri::Out);
  CHECK(D.member(gamble(X1, {2, -1})) == Tri::In);
  CHECK(D.member(gamble(X1, {1, 0})) == Tri::In);
  CHECK(D.member(gamble(X1, {0, 0})) == Tri::Out);
}

TEST_CASE("strictly desirable gambles of a two-vertex model") {
  const auto D = DesirableSetExpr::cells(strictly_desirable(fixtures::two_vertex_binary(X1)));
  CHECK(D.member(gamble(X1, {1, -1})) == Tri::Out);
  CHECK(D.member(gamble(X1, {-1, 1})) == Tri::Out);
  CHECK(D.member(gamble(X1, {2, -1})) == Tri::In);
  CHECK(D.member(gamble(X1, {3, -2})) == Tri::Out);  // zero under (2/5,3/5)
}

TEST_CASE("independent product of precise previsions is the product expectation") {
  const Vector p = vec({q(1, 3), q(2, 3)}), r = vec({q(1, 4), q(3, 4)});
  const CredalSet P(X1, {p}), R(X2, {r});
  for (const auto& v : oracle::grid(4, -1, 1))
    CHECK(inex_lower_prevision({P, R}, Gamble(J, v)) == oracle::product_expectation({p, r}, v));
}

TEST_CASE("independent product of one block") {
  const CredalSet C = fixtures::two_vertex_binary(X1);
  for (const auto& v : oracle::grid(2, -2, 2)) CHECK(inex_lower_prevision({C}, Gamble(X1, v)) == C.lower(v));
}

TEST_CASE("the strong product is strictly above the independent product") {
  const CredalSet C1 = fixtures::two_vertex_binary(X1), C2 = fixtures::two_vertex_binary(X2);
  const Gamble h = fixtures::strong_gap_gamble(J);
  CHECK(strong_product_lower({C1, C2}, h) == q(1, 100));
  CHECK(inex_lower_prevision({C1, C2}, h) <= 0);
  CHECK(oracle::product_envelope({C1.vertices(), C2.vertices()}, h.values()) == q(1, 100));
  for (const Rational c : {q(-1), q(0), q(5, 2)}) CHECK(strong_product_lower({C1, C2}, Gamble::constant(J, c)) == c);
}

TEST_CASE("strong product membership") {
  const auto D1 = DesirableSetExpr::cells(strictly_desirable(fixtures::two_vertex_binary(X1)));
  const auto D2 = DesirableSetExpr::cells(strictly_desirable(fixtures::two_vertex_binary(X2)));
  CHECK(strong_member({D1, D2}, fixtures::strong_gap_gamble(J)) == Tri::In);
  CHECK(strong_member({D1, D2}, gamble(J, {-2, 1, 0, 0})) == Tri::Out);
  CHECK(strong_member({D1, D2}, gamble(J, {0, 0, 0, 1})) == Tri::In);

  const auto M1 = DesirableSetExpr::lex(fixtures::uniform_then_first(X1));
  const auto M2 = DesirableSetExpr::lex(fixtures::uniform_then_first(X2));
  const Gamble h = gamble(J, {-1, 1, 1, -1});
  CHECK(strong_member({M1, M2}, h) == Tri::Out);
  // Maximal lex marginals give the same verdicts as the independent product.
  CHECK(strong_member({M1, M2}, -h) == Tri::Out);
  CHECK(strong_member({M1, M2}, gamble(J, {1, -1, 0, 0})) == Tri::In);
}

TEST_CASE("strong product membership on the boundary is unknown") {
  const auto U1 = DesirableSetExpr::cells(strictly_desirable(uniform(X1)));
  const auto U2 = DesirableSetExpr::cells(strictly_desirable(uniform(X2)));
  CHECK(strong_member({U1, U2}, gamble(J, {1, -1, 1, -1})) == Tri::Unknown);
  CHECK(strong_member({U1, U2}, gamble(J, {2, -1, 1, -1})) == Tri::In);
}

TEST_CASE("grouping blocks of a strong product keeps its lower prevision") {
  // Only the inclusion of the flat product in the grouped one is established;
  // this compares the shared lower envelope, not the sets.
  Rng rng(2024);
  const Scope X3 = fixtures::binary("X3");
  const Scope all = J.unite(X3);
  for (int t = 0; t < 20; ++t) {
    std::vector<CredalSet> C;
    for (const Scope* s : {&X1, &X2, &X3}) C.emplace_back(*s, std::vector<Vector>{random_mass(rng, 2), random_mass(rng, 2)});
    std::vector<Vector> joint12;
    for (const auto& p : C[0].vertices())
      for (const auto& r : C[1].vertices()) {
        Vector m(4);
        m << p(0) * r(0), p(0) * r(1), p(1) * r(0), p(1) * r(1);
        joint12.push_back(m);
      }
    const CredalSet C12(J, joint12);
    for (int k = 0; k < 10; ++k) {
      const Gamble f(all, random_vector(rng, 8, -2, 2));
      CHECK(strong_product_lower({C[0], C[1], C[2]}, f) == strong_product_lower({C12, C[2]}, f));
    }
  }
}

TEST_CASE("generalised Bayes rule") { CHECK_PROPERTY(prop_bayes_rule_residual); }
TEST_CASE("lower and upper previsions are conjugate") { CHECK_PROPERTY(prop_conjugacy); }
TEST_CASE("the strong product dominates the independent product") { CHECK_PROPERTY(prop_strong_dominates_independent); }
TEST_CASE("lower previsions match the credal envelope") { CHECK_PROPERTY(prop_lower_prevision_matches_envelope); }
TEST_CASE("precise products match the product expectation") { CHECK_PROPERTY(prop_precise_product_matches_expectation); }

}  // TEST_SUITE
