// Worked examples shipped with the engine, and the regression suite that
// replays them.
#ifndef SDG_FIXTURES_HPP
#define SDG_FIXTURES_HPP

#include "sdg/expr.hpp"
#include "sdg/sampling.hpp"

#include <string>
#include <vector>

namespace sdg::fixtures {

Scope binary(const std::string& id, const std::string& zero = "0", const std::string& one = "1");

/// Two sets inducing the same lower prevision on {a,b}²: the strictly
/// desirable set of a two-vertex credal set, and the same set refined by the
/// cell {f(b,·) = 0, f(a,a) + f(a,b) > 0}.
struct CredalPair {
  Scope joint;
  CredalSet credal;
  DesirableSetExpr strict;
  DesirableSetExpr refined;
  Gamble g;  // (2,−1,0,0): only the refined set accepts it
};
CredalPair credal_pair();

/// lex[(1/2,1/2),(1,0)] on a binary variable.
LexSystem uniform_then_first(const Scope& X);

/// lex[uniform, δ(0,0), δ(0,1), δ(1,0)] on a product of two binary variables.
LexSystem uniform_then_points(const Scope& joint);

/// Vertices {(2/5,3/5),(1/2,1/2)} on a binary variable.
CredalSet two_vertex_binary(const Scope& X);

/// (51,−49,−49,51)/100 on a product of two binary variables.
Gamble strong_gap_gamble(const Scope& joint);

/// Bounds on w·y, w = (2/5,3/5,3/5,3/5), for the two sides of a domination
/// h ≥ h1 + h2 with h1, h2 in the closed irrelevant extensions of
/// two_vertex_binary: `upper` is max w·y over y ≤ h, `lower` is min
/// w·(h1 + h2) over the cones. upper < lower rules the domination out, and
/// `joint_infeasible` confirms it with one LP holding both constraint sets.
struct CombinationBounds {
  Rational upper;
  Rational lower;
  bool joint_infeasible = false;
};
CombinationBounds strong_gap_bounds(const Gamble& h);

struct SuiteCheck {
  std::string group;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<SuiteCheck> run_suite(const SampleConfig& cfg = {});

}  // namespace sdg::fixtures

#endif  // SDG_FIXTURES_HPP
