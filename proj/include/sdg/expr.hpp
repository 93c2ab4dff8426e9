// Expression trees over sets of desirable gambles.
#ifndef SDG_EXPR_HPP
#define SDG_EXPR_HPP

#include "sdg/cone.hpp"
#include "sdg/sets.hpp"
#include "sdg/space.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sdg {

enum class Tri { In, Out, Unknown };

std::string to_string(Tri t);

struct Limits {
  std::size_t signatures = 100000;    // cells materialised by a sum-form node
  std::size_t vertex_bases = 200000;  // candidate bases in vertex enumeration
  std::size_t combinations = 100000;  // vertex combinations in strong products
  std::size_t block_pairs = 10000;    // (I, O) pairs scanned by independence checks
};

/// Polyhedral form of a node: a union of cells, plus shortcuts.
struct Compiled {
  std::vector<Cell> cells;
  /// Present when the node equals the natural extension of these gambles.
  std::optional<std::vector<Vector>> generators;
  /// Strictly positive p with p·f > 0 for every member f (generator nodes).
  std::optional<Vector> certificate;
  /// Nonnegative q with q·f ≥ 0 for every member f; q·f < 0 rules f out.
  std::vector<Vector> dual_points;
};

class DesirableSetExpr {
 public:
  enum class Kind { Generators, Cells, Lex, Conditioned, CylExt, IrrExt, IndepProduct, StrongProduct, Intersection };

  static DesirableSetExpr generators(GeneratorSet set, Limits limits = {});
  static DesirableSetExpr cells(CellSet set, Limits limits = {});
  static DesirableSetExpr lex(LexSystem system, Limits limits = {});
  /// The "]" operator: {g : I{x_I} g ∈ base}.
  static DesirableSetExpr condition(const DesirableSetExpr& base, const Outcome& x_I);
  static DesirableSetExpr cyl_ext(const DesirableSetExpr& base, const Scope& target);
  /// Natural extension to `target` of the irrelevant extension of base from I.
  static DesirableSetExpr irr_ext(const DesirableSetExpr& base, const Scope& irrelevant, const Scope& target);
  static DesirableSetExpr indep_product(const std::vector<DesirableSetExpr>& factors);
  static DesirableSetExpr strong_product(const std::vector<DesirableSetExpr>& factors);
  static DesirableSetExpr intersection(const std::vector<DesirableSetExpr>& factors);

  Kind kind() const;
  const Scope& scope() const;
  const Limits& limits() const;
  const std::vector<DesirableSetExpr>& children() const;

  const GeneratorSet* as_generators() const;
  const CellSet* as_cells() const;
  const LexSystem* as_lex() const;
  /// Conditioning outcome of a Conditioned node.
  const Outcome& given() const;
  /// Irrelevant scope of an IrrExt node.
  const Scope& irrelevant() const;

  /// True when some generator leaf below fails to avoid non-positivity.
  bool incoherent() const;

  /// In/Out for every node except strong products, which may answer Unknown.
  /// Throws IncoherentBase when the node is incoherent.
  Tri member(const Gamble& f) const;

  /// Built on first use; throws NotRepresentable for strong products.
  const Compiled& compiled() const;

  std::string describe() const;

 private:
  struct Node;
  explicit DesirableSetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Conditional models: one expression per joint outcome of Y.
class ConditionalFamily {
 public:
  ConditionalFamily(Scope given, std::vector<std::optional<DesirableSetExpr>> table);

  const Scope& given() const { return given_; }
  /// Throws ReferenceError when no model is recorded for y.
  const DesirableSetExpr& at(const Outcome& y) const;
  Tri member_given(const Outcome& y, const Gamble& f) const;

 private:
  Scope given_;
  std::vector<std::optional<DesirableSetExpr>> table_;
};

}  // namespace sdg

#endif  // SDG_EXPR_HPP
