#include "sdg/expr.hpp"

#include "sdg/error.hpp"
#include "sdg/previsions.hpp"

#include <mutex>

namespace sdg {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::In: return "In";
    case Tri::Out: return "Out";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

struct DesirableSetExpr::Node {
  Kind kind = Kind::Generators;
  Scope scope;
  Limits limits;
  std::vector<DesirableSetExpr> children;
  std::optional<GeneratorSet> gens;
  std::optional<CellSet> cellset;
  std::optional<LexSystem> lexsys;
  std::optional<Outcome> given;
  Matrix T;  // Conditioned: g ↦ I{x_I}·g on the base scope
  Scope irrelevant;
  bool incoherent = false;

  mutable std::once_flag once;
  mutable std::optional<Compiled> compiled;
};

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void push_unique(std::vector<Vector>& out, Vector v) {
  for (const auto& w : out)
    if (w == v) return;
  out.push_back(std::move(v));
}

// q on a sub-scope pushed to the full scope, constant along the other variables.
Vector spread(const Vector& q, const Scope& from, const Scope& to) { return embedding_matrix(from, to) * q; }

bool any_incoherent(const std::vector<DesirableSetExpr>& xs) {
  for (const auto& x : xs)
    if (x.incoherent()) return true;
  return false;
}

// Sum-form nodes: generators flatten, everything else goes through signatures.
Compiled compile_sum(std::size_t dim, const std::vector<const DesirableSetExpr*>& bases, const std::vector<Matrix>& embeds,
                     const Limits& limits) {
  Compiled out;
  bool all_generators = true;
  for (const auto* b : bases)
    if (!b->compiled().generators) all_generators = false;

  if (all_generators) {
    std::vector<Vector> gens;
    for (std::size_t k = 0; k < bases.size(); ++k)
      for (const auto& g : *bases[k]->compiled().generators) push_unique(gens, embeds[k] * g);
    auto p = positive_certificate(dim, gens);
    if (!p) throw EngineBug("extension of coherent assessments failed to avoid non-positivity");
    out.cells.push_back(generator_cell(dim, gens));
    out.generators = std::move(gens);
    out.certificate = *p;
    out.dual_points.push_back(*p);
    return out;
  }
  std::vector<std::vector<Cell>> parts;
  for (const auto* b : bases) parts.push_back(b->compiled().cells);
  out.cells = sum_cells(dim, parts, embeds, limits.signatures);
  return out;
}

}  // namespace

DesirableSetExpr DesirableSetExpr::generators(GeneratorSet set, Limits limits) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Generators;
  n->scope = set.scope();
  n->limits = limits;
  n->incoherent = !positive_certificate(set.scope().size(), set.vectors()).has_value();
  n->gens = std::move(set);
  return DesirableSetExpr(n);
}

DesirableSetExpr DesirableSetExpr::cells(CellSet set, Limits limits) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cells;
  n->scope = set.scope();
  n->limits = limits;
  n->cellset = std::move(set);
  return DesirableSetExpr(n);
}

DesirableSetExpr DesirableSetExpr::lex(LexSystem system, Limits limits) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lex;
  n->scope = system.scope();
  n->limits = limits;
  n->lexsys = std::move(system);
  return DesirableSetExpr(n);
}

DesirableSetExpr DesirableSetExpr::condition(const DesirableSetExpr& base, const Outcome& x_I) {
  if (!x_I.scope.is_subset_of(base.scope()))
    throw ScopeError("conditioning scope " + x_I.scope.str() + " not in " + base.scope().str());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Conditioned;
  n->scope = base.scope().minus(x_I.scope);
  n->limits = base.limits();
  n->children = {base};
  n->given = x_I;
  n->T = indicator_embedding_matrix(x_I, n->scope, base.scope());
  n->incoherent = base.incoherent();
  return DesirableSetExpr(n);
}

DesirableSetExpr DesirableSetExpr::cyl_ext(const DesirableSetExpr& base, const Scope& target) {
  if (!base.scope().is_subset_of(target))
    throw ScopeError("cylindrical extension target " + target.str() + " does not contain " + base.scope().str());
  auto n = std::make_shared<Node>();
  n->kind = Kind::CylExt;
  n->scope = target;
  n->limits = base.limits();
  n->children = {base};
  n->incoherent = base.incoherent();
  return DesirableSetExpr(n);
}

DesirableSetExpr DesirableSetExpr::irr_ext(const DesirableSetExpr& base, const Scope& irrelevant, const Scope& target) {
  if (!irrelevant.disjoint_from(base.scope()))
    throw ScopeError("irrelevant scope " + irrelevant.str() + " overlaps " + base.scope().str());
  if (!irrelevant.is_subset_of(target) || !base.scope().is_subset_of(target))
    throw ScopeError("target " + target.str() + " must contain both scopes");
  auto n = std::make_shared<Node>();
  n->kind = Kind::IrrExt;
  n->scope = target;
  n->limits = base.limits();
  n->children = {base};
  n->irrelevant = irrelevant;
  n->incoherent = base.incoherent();
  return DesirableSetExpr(n);
}

namespace {

Scope disjoint_union(const std::vector<DesirableSetExpr>& factors, const char* what) {
  if (factors.empty()) throw Error(std::string(what) + " needs at least one factor");
  Scope joint;
  for (const auto& f : factors) {
    if (!joint.disjoint_from(f.scope()))
      throw ScopeError(std::string(what) + " factors must have disjoint scopes");
    joint = joint.unite(f.scope());
  }
  return joint;
}

}  // namespace

DesirableSetExpr DesirableSetExpr::indep_product(const std::vector<DesirableSetExpr>& factors) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::IndepProduct;
  n->scope = disjoint_union(factors, "independent product");
  n->limits = factors.front().limits();
  n->children = factors;
  n->incoherent = any_incoherent(factors);
  return DesirableSetExpr(n);
}

DesirableSetExpr DesirableSetExpr::strong_product(const std::vector<DesirableSetExpr>& factors) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::StrongProduct;
  n->scope = disjoint_union(factors, "strong product");
  n->limits = factors.front().limits();
  n->children = factors;
  n->incoherent = any_incoherent(factors);
  return DesirableSetExpr(n);
}

DesirableSetExpr DesirableSetExpr::intersection(const std::vector<DesirableSetExpr>& factors) {
  if (factors.empty()) throw Error("intersection needs at least one factor");
  for (const auto& f : factors)
    if (!(f.scope() == factors.front().scope())) throw ScopeError("intersection factors must share a scope");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Intersection;
  n->scope = factors.front().scope();
  n->limits = factors.front().limits();
  n->children = factors;
  n->incoherent = any_incoherent(factors);
  return DesirableSetExpr(n);
}

DesirableSetExpr::Kind DesirableSetExpr::kind() const { return node_->kind; }
const Scope& DesirableSetExpr::scope() const { return node_->scope; }
const Limits& DesirableSetExpr::limits() const { return node_->limits; }
const std::vector<DesirableSetExpr>& DesirableSetExpr::children() const { return node_->children; }
const GeneratorSet* DesirableSetExpr::as_generators() const { return node_->gens ? &*node_->gens : nullptr; }
const CellSet* DesirableSetExpr::as_cells() const { return node_->cellset ? &*node_->cellset : nullptr; }
const LexSystem* DesirableSetExpr::as_lex() const { return node_->lexsys ? &*node_->lexsys : nullptr; }
bool DesirableSetExpr::incoherent() const { return node_->incoherent; }

const Outcome& DesirableSetExpr::given() const {
  if (!node_->given) throw Error("not a conditioned expression");
  return *node_->given;
}

const Scope& DesirableSetExpr::irrelevant() const {
  if (node_->kind != Kind::IrrExt) throw Error("not an irrelevant extension");
  return node_->irrelevant;
}

const Compiled& DesirableSetExpr::compiled() const {
  const Node& n = *node_;
  if (n.kind == Kind::StrongProduct) throw NotRepresentable("strong products have no polyhedral representation");
  if (n.incoherent) throw IncoherentBase("assessment below " + describe() + " does not avoid non-positivity");
  std::call_once(n.once, [&] {
    const std::size_t dim = n.scope.size();
    Compiled c;
    switch (n.kind) {
      case Kind::Generators: {
        const auto gens = n.gens->vectors();
        c.cells.push_back(generator_cell(dim, gens));
        c.generators = gens;
        c.certificate = positive_certificate(dim, gens);
        c.dual_points.push_back(*c.certificate);
        // Credal vertices reject by sign alone; skip them when enumeration is costly.
        try {
          Limits small = n.limits;
          small.vertex_bases = std::min<std::size_t>(small.vertex_bases, 2000);
          const CredalSet credal = credal_vertices(*n.gens, small);
          for (const auto& q : credal.vertices()) push_unique(c.dual_points, q);
        } catch (const BudgetExceeded&) {
        }
        break;
      }
      case Kind::Cells: {
        for (const auto& spec : n.cellset->cells()) {
          std::vector<std::pair<Vector, Relation>> rows;
          for (const auto& r : spec.rows) rows.emplace_back(r.functional, r.rel);
          c.cells.push_back(functional_cell(dim, rows, spec.excludes_zero));
        }
        if (n.cellset->include_positive()) c.cells.push_back(positive_cell(dim));
        if (n.cellset->family() == CellFamily::StrictlyDesirable) c.dual_points = n.cellset->credal_vertices();
        break;
      }
      case Kind::Lex: {
        const auto& levels = n.lexsys->levels();
        for (std::size_t i = 0; i < levels.size(); ++i) {
          std::vector<std::pair<Vector, Relation>> rows;
          for (std::size_t j = 0; j < i; ++j) rows.emplace_back(levels[j], Relation::Equal);
          rows.emplace_back(levels[i], Relation::Greater);
          c.cells.push_back(functional_cell(dim, rows, false));
        }
        if (!levels.empty()) c.dual_points.push_back(levels.front());
        break;
      }
      case Kind::Conditioned: {
        const Compiled& base = n.children.front().compiled();
        for (const auto& cell : base.cells) c.cells.push_back(substitute(cell, n.T, true));
        for (const auto& q : base.dual_points) {
          Vector r = n.T.transpose() * q;
          if (!is_zero_vector(r)) push_unique(c.dual_points, std::move(r));
        }
        break;
      }
      case Kind::CylExt: {
        const auto& base = n.children.front();
        c = compile_sum(dim, {&base}, {embedding_matrix(base.scope(), n.scope)}, n.limits);
        for (const auto& q : base.compiled().dual_points) push_unique(c.dual_points, spread(q, base.scope(), n.scope));
        break;
      }
      case Kind::IrrExt: {
        const auto& base = n.children.front();
        std::vector<const DesirableSetExpr*> bases;
        std::vector<Matrix> embeds;
        for (std::size_t i = 0; i < n.irrelevant.size(); ++i) {
          bases.push_back(&base);
          embeds.push_back(indicator_embedding_matrix(Outcome{n.irrelevant, i}, base.scope(), n.scope));
        }
        c = compile_sum(dim, bases, embeds, n.limits);
        for (const auto& q : base.compiled().dual_points) push_unique(c.dual_points, spread(q, base.scope(), n.scope));
        break;
      }
      case Kind::IndepProduct: {
        std::vector<const DesirableSetExpr*> bases;
        std::vector<Matrix> embeds;
        for (const auto& f : n.children) {
          const Scope others = n.scope.minus(f.scope());
          for (std::size_t z = 0; z < others.size(); ++z) {
            bases.push_back(&f);
            embeds.push_back(indicator_embedding_matrix(Outcome{others, z}, f.scope(), n.scope));
          }
        }
        c = compile_sum(dim, bases, embeds, n.limits);
        // Products of per-factor dual points are dual points of the product.
        std::vector<Vector> products{Vector::Ones(idx(dim))};
        for (const auto& f : n.children) {
          const auto& qs = f.compiled().dual_points;
          if (qs.empty()) {
            products.clear();
            break;
          }
          std::vector<Vector> next;
          for (const auto& partial : products)
            for (const auto& q : qs) {
              if (next.size() >= 64) break;
              next.push_back(partial.cwiseProduct(spread(q, f.scope(), n.scope)));
            }
          products = std::move(next);
        }
        for (auto& q : products) push_unique(c.dual_points, std::move(q));
        break;
      }
      case Kind::Intersection: {
        std::vector<Cell> acc = n.children.front().compiled().cells;
        for (std::size_t k = 1; k < n.children.size(); ++k) {
          const auto& other = n.children[k].compiled().cells;
          if (acc.size() * other.size() > n.limits.signatures)
            throw BudgetExceeded("intersection cell product exceeds budget");
          std::vector<Cell> next;
          for (const auto& a : acc)
            for (const auto& b : other) next.push_back(conjoin(a, b));
          acc = std::move(next);
        }
        c.cells = std::move(acc);
        for (const auto& f : n.children)
          for (const auto& q : f.compiled().dual_points) push_unique(c.dual_points, q);
        break;
      }
      case Kind::StrongProduct: break;
    }
    n.compiled = std::move(c);
  });
  return *n.compiled;
}

Tri DesirableSetExpr::member(const Gamble& f) const {
  const Node& n = *node_;
  if (!(f.scope() == n.scope)) throw ScopeError("gamble scope " + f.scope().str() + " differs from " + n.scope.str());
  if (n.incoherent) throw IncoherentBase("assessment below " + describe() + " does not avoid non-positivity");
  switch (n.kind) {
    case Kind::Cells: return n.cellset->contains(f.values()) ? Tri::In : Tri::Out;
    case Kind::Lex: return n.lexsys->contains(f.values()) ? Tri::In : Tri::Out;
    case Kind::Conditioned: {
      const auto& base = n.children.front();
      return base.member(Gamble(base.scope(), n.T * f.values()));
    }
    case Kind::StrongProduct: return strong_member(n.children, f);
    case Kind::Intersection: {
      Tri acc = Tri::In;
      for (const auto& c : n.children) {
        const Tri t = c.member(f);
        if (t == Tri::Out) return Tri::Out;
        if (t == Tri::Unknown) acc = Tri::Unknown;
      }
      return acc;
    }
    default: break;
  }
  if (f.is_zero()) return Tri::Out;
  if (f.is_positive()) return Tri::In;
  const Compiled& c = compiled();
  if (c.certificate && c.certificate->dot(f.values()) <= 0) return Tri::Out;
  for (const auto& q : c.dual_points)
    if (q.dot(f.values()) < 0) return Tri::Out;
  for (const auto& cell : c.cells)
    if (cell_contains(cell, f.values())) return Tri::In;
  return Tri::Out;
}

std::string DesirableSetExpr::describe() const {
  const Node& n = *node_;
  auto list = [&](const char* name) {
    std::string s = std::string(name) + "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) s += ", ";
      s += n.children[i].describe();
    }
    return s + ")";
  };
  switch (n.kind) {
    case Kind::Generators: return "generators" + n.scope.str() + "[" + std::to_string(n.gens->gens().size()) + "]";
    case Kind::Cells: return "cells" + n.scope.str() + "[" + std::to_string(n.cellset->cells().size()) + "]";
    case Kind::Lex: return "lex" + n.scope.str() + "[" + std::to_string(n.lexsys->depth()) + "]";
    case Kind::Conditioned: return "condition(" + n.children.front().describe() + " | " + n.given->str() + ")";
    case Kind::CylExt: return "cyl_ext(" + n.children.front().describe() + " -> " + n.scope.str() + ")";
    case Kind::IrrExt:
      return "irr_ext(" + n.children.front().describe() + ", " + n.irrelevant.str() + " -> " + n.scope.str() + ")";
    case Kind::IndepProduct: return list("inex");
    case Kind::StrongProduct: return list("strong");
    case Kind::Intersection: return list("intersection");
  }
  return "?";
}

ConditionalFamily::ConditionalFamily(Scope given, std::vector<std::optional<DesirableSetExpr>> table)
    : given_(std::move(given)), table_(std::move(table)) {
  if (table_.size() != given_.size())
    throw DimensionError("conditional family needs one slot per outcome of " + given_.str());
  const DesirableSetExpr* first = nullptr;
  for (const auto& e : table_)
    if (e) {
      if (first && !(e->scope() == first->scope())) throw ScopeError("conditional family entries differ in scope");
      first = &*e;
    }
}

const DesirableSetExpr& ConditionalFamily::at(const Outcome& y) const {
  if (!(y.scope == given_)) throw ScopeError("outcome scope " + y.scope.str() + " differs from " + given_.str());
  const auto& e = table_.at(y.index);
  if (!e) throw ReferenceError("no model recorded for " + y.str());
  return *e;
}

Tri ConditionalFamily::member_given(const Outcome& y, const Gamble& f) const { return at(y).member(f); }

}  // namespace sdg
