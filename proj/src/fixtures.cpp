#include "sdg/fixtures.hpp"

#include "sdg/error.hpp"
#include "sdg/maximal.hpp"
#include "sdg/previsions.hpp"

#include <algorithm>

namespace sdg::fixtures {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Vector vec(std::initializer_list<Rational> xs) {
  Vector v(idx(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

Scope binary(const std::string& id, const std::string& zero, const std::string& one) {
  return Scope({VariableDecl{id, {zero, one}}});
}

CredalPair credal_pair() {
  const Scope joint = binary("X1", "a", "b").unite(binary("X2", "a", "b"));
  CredalSet credal(joint, {vec({0, 0, q(1, 2), q(1, 2)}), vec({0, 0, q(1, 4), q(3, 4)})});
  const CellSet strict = strictly_desirable(credal);
  CellSpec extra;
  extra.rows = {CellRow{vec({0, 0, 1, 0}), Relation::Equal}, CellRow{vec({0, 0, 0, 1}), Relation::Equal},
                CellRow{vec({1, 1, 0, 0}), Relation::Greater}};
  return CredalPair{joint, credal, DesirableSetExpr::cells(strict), DesirableSetExpr::cells(strict.with_cell(extra)),
                    Gamble(joint, vec({2, -1, 0, 0}))};
}

LexSystem uniform_then_first(const Scope& X) { return LexSystem(X, {vec({q(1, 2), q(1, 2)}), vec({1, 0})}); }

LexSystem uniform_then_points(const Scope& joint) {
  const Rational u(1, 4);
  return LexSystem(joint, {vec({u, u, u, u}), vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0})});
}

CredalSet two_vertex_binary(const Scope& X) { return CredalSet(X, {vec({q(2, 5), q(3, 5)}), vec({q(1, 2), q(1, 2)})}); }

Gamble strong_gap_gamble(const Scope& joint) {
  return Gamble(joint, vec({q(51, 100), q(-49, 100), q(-49, 100), q(51, 100)}));
}

CombinationBounds strong_gap_bounds(const Gamble& h) {
  const Scope& joint = h.scope();
  if (joint.num_vars() != 2 || joint.size() != 4) throw ScopeError("expected two binary variables");
  const Vector w = vec({q(2, 5), q(3, 5), q(3, 5), q(3, 5)});
  const Scope X1 = joint.select({joint.vars()[0].id}), X2 = joint.select({joint.vars()[1].id});
  const CredalSet C1 = two_vertex_binary(X1), C2 = two_vertex_binary(X2);

  // h_1 varies along X2 for fixed x1 (irrelevance of X1 to X2), h_2 the other way.
  auto add_cones = [&](LinSystem& sys) {
    for (int block = 0; block < 2; ++block) {
      const Scope& fixed = block == 0 ? X1 : X2;
      const Scope& varying = block == 0 ? X2 : X1;
      const CredalSet& C = block == 0 ? C2 : C1;
      const auto to_fixed = restriction_map(joint, fixed), to_varying = restriction_map(joint, varying);
      for (std::size_t z = 0; z < 2; ++z)
        for (const auto& p : C.vertices()) {
          Vector row = Vector::Zero(8);
          for (std::size_t x = 0; x < 4; ++x)
            if (to_fixed[x] == z) row(idx(4 * block + x)) = p(idx(to_varying[x]));
          sys.add(std::move(row), Relation::GreaterEq);
        }
    }
  };
  CombinationBounds out;

  LinSystem upper(4);
  for (std::size_t x = 0; x < 4; ++x) {
    Vector row = Vector::Zero(4);
    row(idx(x)) = -1;
    upper.add(std::move(row), Relation::GreaterEq, -h[x]);
  }
  upper.maximize(w);
  out.upper = std::get<Optimal>(solve(upper)).value;

  Vector sum_w(8);
  sum_w << w, w;
  LinSystem lower(8);
  add_cones(lower);
  lower.minimize(sum_w);
  out.lower = std::get<Optimal>(solve(lower)).value;

  LinSystem joint_sys(8);
  add_cones(joint_sys);
  for (std::size_t x = 0; x < 4; ++x) {
    Vector row = Vector::Zero(8);
    row(idx(x)) = -1;
    row(idx(4 + x)) = -1;
    joint_sys.add(std::move(row), Relation::GreaterEq, -h[x]);
  }
  out.joint_infeasible = std::holds_alternative<Infeasible>(solve(joint_sys));
  return out;
}

namespace {

class Collector {
 public:
  explicit Collector(std::vector<SuiteCheck>& out) : out_(out) {}
  void group(std::string g) { group_ = std::move(g); }
  void check(std::string name, bool pass, std::string detail = {}) {
    out_.push_back(SuiteCheck{group_, std::move(name), pass, std::move(detail)});
  }
  // Runs a check body, turning engine errors into failures.
  template <typename F>
  void guarded(const std::string& name, F body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("error: ") + e.what());
    }
  }

 private:
  std::vector<SuiteCheck>& out_;
  std::string group_;
};

SampleConfig grid(std::int64_t lo, std::int64_t hi, const SampleConfig& cfg) {
  SampleConfig g = cfg;
  g.lo = lo;
  g.hi = hi;
  return g;
}

}  // namespace

std::vector<SuiteCheck> run_suite(const SampleConfig& cfg) {
  std::vector<SuiteCheck> out;
  Collector c(out);

  c.group("credal pair");
  c.guarded("boundary gamble", [&] {
    const CredalPair P = credal_pair();
    const Tri a = P.strict.member(P.g), b = P.refined.member(P.g);
    c.check("g rejected by the strict set", a == Tri::Out, to_string(a));
    c.check("g accepted by the refined set", b == Tri::In, to_string(b));
  });
  c.guarded("lower prevision", [&] {
    const CredalPair P = credal_pair();
    const SampleConfig g = grid(-2, 2, cfg);
    std::size_t n = 0, bad = 0;
    for (const auto& v : sample_gambles(4, g)) {
      const Rational expect = std::min((v(2) + v(3)) / 2, (v(2) + 3 * v(3)) / 4);
      const Gamble f(P.joint, v);
      if (lower_prevision(P.strict, f) != expect || lower_prevision(P.refined, f) != expect) ++bad;
      ++n;
    }
    c.check("both sets induce the closed-form lower prevision", bad == 0,
            std::to_string(n) + " gambles, " + std::to_string(bad) + " mismatches");
  });

  c.group("zero-probability conditioning");
  c.guarded("conditional lower previsions", [&] {
    const CredalPair P = credal_pair();
    const Outcome a = make_outcome(P.joint.select({"X1"}), {{"X1", "a"}});
    const Scope X2 = P.joint.select({"X2"});
    std::size_t bad_vacuous = 0, bad_uniform = 0, n = 0;
    for (const auto& v : sample_gambles(2, grid(-3, 3, cfg))) {
      const Gamble g(X2, v);
      if (conditional_lower_prevision(P.strict, a, g) != std::min(v(0), v(1))) ++bad_vacuous;
      if (conditional_lower_prevision(P.refined, a, g) != (v(0) + v(1)) / 2) ++bad_uniform;
      ++n;
    }
    c.check("strict set conditions to the vacuous prevision", bad_vacuous == 0,
            std::to_string(n) + " gambles, " + std::to_string(bad_vacuous) + " mismatches");
    c.check("refined set conditions to the uniform prevision", bad_uniform == 0,
            std::to_string(n) + " gambles, " + std::to_string(bad_uniform) + " mismatches");
  });

  const Scope X1 = binary("X1"), X2 = binary("X2");
  const Scope J = X1.unite(X2);

  c.group("lex product");
  c.guarded("non-maximal product", [&] {
    const LexSystem M1 = uniform_then_first(X1), M2 = uniform_then_first(X2);
    const auto prod = DesirableSetExpr::indep_product({DesirableSetExpr::lex(M1), DesirableSetExpr::lex(M2)});
    const Gamble h(J, vec({-1, 1, 1, -1}));
    c.check("marginal is maximal", lex_is_maximal(M1));
    c.check("h rejected by the product", prod.member(h) == Tri::Out);
    c.check("-h rejected by the product", prod.member(-h) == Tri::Out);
    const Gamble w = nonmaximality_witness(M1, M2);
    c.check("constructed witness verifies", true, w.str());
  });

  c.group("maximal product");
  c.guarded("maximal independent product", [&] {
    const LexSystem Mp = uniform_then_points(J);
    c.check("M' is maximal", lex_is_maximal(Mp));
    c.check("M' is an independent product", maximal_product_check(Mp));
    const auto prod = DesirableSetExpr::indep_product(
        {DesirableSetExpr::lex(uniform_then_first(X1)), DesirableSetExpr::lex(uniform_then_first(X2))});
    std::size_t accepted = 0, missed = 0;
    for (const auto& v : sample_gambles(4, grid(-2, 2, cfg))) {
      const Gamble f(J, v);
      if (prod.member(f) != Tri::In) continue;
      ++accepted;
      if (!lex_member(Mp, f)) ++missed;
    }
    c.check("M' contains the product", missed == 0,
            std::to_string(accepted) + " accepted gambles, " + std::to_string(missed) + " missed");
  });

  c.group("strong product");
  c.guarded("strict inclusion", [&] {
    const CredalSet C1 = two_vertex_binary(X1), C2 = two_vertex_binary(X2);
    const Gamble h = strong_gap_gamble(J);
    const Rational S = strong_product_lower({C1, C2}, h);
    c.check("strong lower prevision is 1/100", S == Rational(1, 100), to_string(S));
    const auto D1 = DesirableSetExpr::cells(strictly_desirable(C1)), D2 = DesirableSetExpr::cells(strictly_desirable(C2));
    c.check("h rejected by the independent product",
            DesirableSetExpr::indep_product({D1, D2}).member(h) == Tri::Out);
    c.check("h accepted by the strong product", strong_member({D1, D2}, h) == Tri::In);
    const CombinationBounds b = strong_gap_bounds(h);
    c.check("combination bound is -39/500", b.upper == Rational(-39, 500), to_string(b.upper));
    c.check("cone bound is 0", b.lower == 0, to_string(b.lower));
    c.check("joint system infeasible", b.joint_infeasible);
  });
  return out;
}

}  // namespace sdg::fixtures
