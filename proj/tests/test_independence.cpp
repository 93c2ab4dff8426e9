#include "check_property.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include "sdg/error.hpp"
#include "sdg/fixtures.hpp"
#include "sdg/independence.hpp"
#include "sdg/structure.hpp"

using namespace sdg;
using namespace sdg::test;

namespace {

const Scope X1 = ab("X1"), X2 = ab("X2");
const Scope J = X1.unite(X2);

DesirableSetExpr gens(const Scope& s, std::vector<Gamble> g) {
  return DesirableSetExpr::generators(GeneratorSet(s, std::move(g)));
}

DesirableSetExpr vacuous(const Scope& s) { return gens(s, {}); }

SampleConfig small_grid() {
  SampleConfig cfg;
  cfg.lo = -2;
  cfg.hi = 2;
  return cfg;
}

}  // namespace

TEST_SUITE("independence") {

TEST_CASE("irrelevant gambles are those with every slice in the base") {
  const IrrExtSpec spec{gens(X2, {gamble(X2, {1, -1})}), X1, J};
  CHECK(irr_member(spec, gamble(J, {1, -1, 0, 0})) == Tri::In);
  CHECK(irr_member(spec, gamble(J, {0, 0, 2, -2})) == Tri::In);
  CHECK(irr_member(spec, gamble(J, {1, -1, 3, 1})) == Tri::In);
  CHECK(irr_member(spec, gamble(J, {1, -1, -1, 1})) == Tri::Out);
  CHECK(irr_member(spec, Gamble::zero(J)) == Tri::Out);
}

TEST_CASE("with nothing irrelevant the irrelevant gambles are the base") {
  const auto base = gens(X2, {gamble(X2, {1, -1})});
  const IrrExtSpec spec{base, Scope(), X2};
  for (const auto& v : oracle::grid(2, -2, 2)) {
    const Gamble f(X2, v);
    CHECK(irr_member(spec, f) == base.member(f));
  }
}

TEST_CASE("irrelevant extension of a vacuous base") {
  const IrrExtSpec spec{vacuous(X2), X1, J};
  CHECK(irrext_member(spec, gamble(J, {1, 0, 0, -1})) == Tri::Out);
  CHECK(irrext_member(spec, gamble(J, {1, 0, 0, 0})) == Tri::In);
  for (const auto& v : oracle::grid(4, -1, 1)) {
    const bool positive = all_nonnegative(v) && !is_zero_vector(v);
    CHECK(irrext_member(spec, Gamble(J, v)) == (positive ? Tri::In : Tri::Out));
  }
}

TEST_CASE("irrelevant extension matches elimination over the slice generators") {
  const auto g = gamble(X2, {2, -1});
  const IrrExtSpec spec{gens(X2, {g}), X1, J};
  const std::vector<Vector> slice_gens = {vec({2, -1, 0, 0}), vec({0, 0, 2, -1})};
  for (const auto& v : oracle::grid(4, -1, 1)) {
    const auto expect = oracle::natext_fm(slice_gens, v);
    REQUIRE(expect.has_value());
    CHECK((irrext_member(spec, Gamble(J, v)) == Tri::In) == *expect);
  }
}

TEST_CASE("independent product of vacuous marginals is vacuous") {
  for (const auto& v : oracle::grid(4, -1, 1)) {
    const bool positive = all_nonnegative(v) && !is_zero_vector(v);
    CHECK(inex_member({vacuous(X1), vacuous(X2)}, Gamble(J, v)) == (positive ? Tri::In : Tri::Out));
  }
}

TEST_CASE("independent product of one marginal is that marginal") {
  const auto D = gens(X1, {gamble(X1, {1, -2})});
  for (const auto& v : oracle::grid(2, -2, 2)) {
    const Gamble f(X1, v);
    CHECK(inex_member({D}, f) == D.member(f));
  }
}

TEST_CASE("independent product of the uniform-then-first lex marginals") {
  const auto M1 = DesirableSetExpr::lex(fixtures::uniform_then_first(X1));
  const auto M2 = DesirableSetExpr::lex(fixtures::uniform_then_first(X2));
  const Gamble h = gamble(J, {-1, 1, 1, -1});
  CHECK(inex_member({M1, M2}, h) == Tri::Out);
  CHECK(inex_member({M1, M2}, -h) == Tri::Out);
  // (1,−1) is in the second marginal only at the second level.
  CHECK(inex_member({M1, M2}, gamble(J, {1, -1, 0, 0})) == Tri::In);
  CHECK(inex_member({M1, M2}, gamble(J, {1, -1, 1, -1})) == Tri::In);
  CHECK(inex_member({M1, M2}, gamble(J, {-1, 1, 0, 0})) == Tri::Out);
}

TEST_CASE("independent product scope errors") {
  CHECK_THROWS_AS(inex_member({vacuous(X1), vacuous(X1)}, Gamble::zero(X1)), ScopeError);
}

TEST_CASE("irrelevance holds for an irrelevant extension") {
  const auto E = DesirableSetExpr::irr_ext(gens(X2, {gamble(X2, {2, -1})}), X1, J);
  const Verdict v = is_irrelevant(E, X1, X2, small_grid());
  CHECK(v.pass);
  CHECK(v.exhaustive);
  CHECK(v.label() == "Pass(exhaustive)");
  CHECK(v.checks == 2 * 25);
}

TEST_CASE("irrelevance is refuted with a counterexample") {
  const auto E = gens(J, {gamble(J, {1, -1, 0, 0})});
  const Verdict v = is_irrelevant(E, X1, X2, small_grid());
  REQUIRE_FALSE(v.pass);
  CHECK(v.label() == "Fail");
  REQUIRE(v.counterexample.has_value());
  REQUIRE(v.at.has_value());
  const Gamble f = embed(*v.counterexample, J);
  const Gamble lifted = product(embed(indicator(*v.at), J), f);
  CHECK(E.member(f) != E.member(lifted));
}

TEST_CASE("irrelevance with an empty side is vacuous") {
  const auto E = gens(J, {gamble(J, {1, -1, 0, 0})});
  CHECK(is_irrelevant(E, Scope(), X2).pass);
  CHECK(is_irrelevant(E, X1, Scope()).pass);
  CHECK_THROWS_AS(is_irrelevant(E, X1, X1), ScopeError);
}

TEST_CASE("independence holds for an independent product") {
  const auto E = DesirableSetExpr::indep_product({gens(X1, {gamble(X1, {1, -1})}), gens(X2, {gamble(X2, {2, -1})})});
  const Verdict v = is_independent(E, {X1, X2}, small_grid());
  CHECK(v.pass);
  CHECK(v.exhaustive);
}

TEST_CASE("independence is refuted for a coupled generator") {
  const auto E = gens(J, {gamble(J, {1, -1, 0, 0})});
  const Verdict v = is_independent(E, {X1, X2}, small_grid());
  CHECK_FALSE(v.pass);
  CHECK(v.counterexample.has_value());
}

TEST_CASE("a single block is trivially independent") {
  CHECK(is_independent(gens(J, {gamble(J, {1, 0, 0, -2})}), {J}).pass);
  CHECK_THROWS_AS(is_independent(vacuous(J), {X1}), ScopeError);
}

TEST_CASE("factorisation") {
  const auto prod = DesirableSetExpr::indep_product({gens(X1, {gamble(X1, {1, -1})}), gens(X2, {gamble(X2, {2, -1})})});
  CHECK(factorisation_check(prod, X1, X2, small_grid()).pass);
  // (1,−1) on X2 is in E but (1,0)·(1,−1) = (1,−1,0,0) is not.
  const auto E = gens(J, {gamble(J, {1, -1, 1, -1})});
  const Verdict v = factorisation_check(E, X1, X2, small_grid());
  CHECK_FALSE(v.pass);
  CHECK(v.counterexample.has_value());
}

TEST_CASE("conditional product with one conditioning outcome") {
  const Scope Y = var("Y", 1);
  const auto D1 = gens(X1, {gamble(X1, {1, -1})});
  const auto D2 = gens(X2, {gamble(X2, {2, -1})});
  const ConditionalFamily F1(Y, {D1}), F2(Y, {D2});
  const ConditionalFamily prod = conditional_inex({F1, F2});
  const Outcome y{Y, 0};
  for (const auto& v : oracle::grid(4, -1, 1)) {
    const Gamble f(J, v);
    CHECK(prod.member_given(y, f) == inex_member({D1, D2}, f));
  }
}

TEST_CASE("conditional product with repeated slices") {
  const Scope Y = var("Y", 2);
  const auto D1 = gens(X1, {gamble(X1, {1, -1})});
  const auto D2 = gens(X2, {gamble(X2, {1, -2})});
  const ConditionalFamily prod = conditional_inex({ConditionalFamily(Y, {D1, D1}), ConditionalFamily(Y, {D2, D2})});
  for (const auto& v : oracle::grid(4, -1, 1)) {
    const Gamble f(J, v);
    CHECK(prod.member_given(Outcome{Y, 0}, f) == prod.member_given(Outcome{Y, 1}, f));
  }
}

TEST_CASE("conditional product needs every slice") {
  const Scope Y = var("Y", 2);
  const auto D1 = gens(X1, {gamble(X1, {1, -1})});
  const ConditionalFamily partial(Y, {D1, std::nullopt});
  const auto D2 = gens(X2, {gamble(X2, {1, -1})});
  CHECK_THROWS_AS(conditional_inex({partial, ConditionalFamily(Y, {D2, D2})}), ReferenceError);
  CHECK_THROWS_AS(conditional_inex({partial, ConditionalFamily(var("W", 2), {D1, D1})}), ScopeError);
}

TEST_CASE("irrelevant extensions are irrelevant") { CHECK_PROPERTY(prop_irrelevant_extension_is_irrelevant); }
TEST_CASE("irrelevant extensions marginalise to the base") { CHECK_PROPERTY(prop_irrelevant_extension_marginal); }
TEST_CASE("factorisation of products") { CHECK_PROPERTY(prop_factorisation); }
TEST_CASE("products are coherent") { CHECK_PROPERTY(prop_product_coherence); }
TEST_CASE("products marginalise to their factors") { CHECK_PROPERTY(prop_product_marginal); }
TEST_CASE("conditioning a product on one block") { CHECK_PROPERTY(prop_product_conditioning); }
TEST_CASE("intersections of independent products stay independent") { CHECK_PROPERTY(prop_intersection_independent); }

}  // TEST_SUITE
