#include "sdg/cone.hpp"

#include "sdg/error.hpp"

namespace sdg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Rational eval_row(const Vector& coeffs, const Vector& f) { return coeffs.head(f.size()).dot(f); }

bool relation_holds(const Rational& lhs, Relation rel) {
  switch (rel) {
    case Relation::GreaterEq: return lhs >= 0;
    case Relation::Equal: return lhs == 0;
    case Relation::Greater: return lhs > 0;
  }
  return false;
}

// The cell's rows restricted to a line f0 + μ d, over the variables (μ, aux).
LinSystem line_system(const Cell& cell, const Vector& f0, const Vector& d) {
  std::vector<std::string> names{"mu"};
  std::vector<bool> nonneg{false};
  for (std::size_t j = 0; j < cell.aux(); ++j) {
    names.push_back("a" + std::to_string(j));
    nonneg.push_back(cell.aux_nonneg[j]);
  }
  LinSystem sys(std::move(names), std::move(nonneg));
  const auto dim = idx(cell.dim);
  for (const auto& r : cell.rows) {
    Vector c(idx(1 + cell.aux()));
    const auto af = r.coeffs.head(dim);
    c(0) = af.dot(d);
    c.tail(idx(cell.aux())) = r.coeffs.tail(idx(cell.aux()));
    sys.add(std::move(c), r.rel, -af.dot(f0));
  }
  return sys;
}

Vector unit(std::size_t n, std::size_t i) {
  Vector e = Vector::Zero(idx(n));
  e(idx(i)) = 1;
  return e;
}

}  // namespace

bool Cell::has_strict() const {
  for (const auto& r : rows)
    if (r.rel == Relation::Greater) return true;
  return false;
}

Cell generator_cell(std::size_t dim, const std::vector<Vector>& gens) {
  Cell c;
  c.dim = dim;
  c.aux_nonneg.assign(gens.size(), true);
  c.exclude_zero = true;
  for (std::size_t x = 0; x < dim; ++x) {
    Vector row = Vector::Zero(idx(dim + gens.size()));
    row(idx(x)) = 1;
    for (std::size_t k = 0; k < gens.size(); ++k) row(idx(dim + k)) = -gens[k](idx(x));
    c.rows.push_back(ConeRow{std::move(row), Relation::GreaterEq});
  }
  c.generators = gens;
  return c;
}

Cell functional_cell(std::size_t dim, const std::vector<std::pair<Vector, Relation>>& rows, bool exclude_zero) {
  Cell c;
  c.dim = dim;
  c.exclude_zero = exclude_zero;
  for (const auto& [functional, rel] : rows) {
    if (static_cast<std::size_t>(functional.size()) != dim) throw DimensionError("cell functional has wrong length");
    c.rows.push_back(ConeRow{functional, rel});
  }
  return c;
}

Cell positive_cell(std::size_t dim) {
  Cell c;
  c.dim = dim;
  for (std::size_t x = 0; x < dim; ++x) c.rows.push_back(ConeRow{unit(dim, x), Relation::GreaterEq});
  c.rows.push_back(ConeRow{Vector::Ones(idx(dim)), Relation::Greater});
  c.positive_orthant = true;
  return c;
}

Cell substitute(const Cell& cell, const Matrix& T, bool keeps_orthant) {
  if (static_cast<std::size_t>(T.rows()) != cell.dim) throw DimensionError("substitution matrix has wrong shape");
  Cell out;
  out.dim = static_cast<std::size_t>(T.cols());
  out.aux_nonneg = cell.aux_nonneg;
  out.exclude_zero = cell.exclude_zero;
  out.positive_orthant = cell.positive_orthant && keeps_orthant;
  const auto a = idx(cell.aux());
  for (const auto& r : cell.rows) {
    Vector c(idx(out.dim) + a);
    c.head(T.cols()) = T.transpose() * r.coeffs.head(T.rows());
    c.tail(a) = r.coeffs.tail(a);
    out.rows.push_back(ConeRow{std::move(c), r.rel});
  }
  return out;
}

Cell conjoin(const Cell& a, const Cell& b) {
  if (a.dim != b.dim) throw DimensionError("conjoining cells of different dimension");
  Cell out;
  out.dim = a.dim;
  out.aux_nonneg = a.aux_nonneg;
  out.aux_nonneg.insert(out.aux_nonneg.end(), b.aux_nonneg.begin(), b.aux_nonneg.end());
  out.exclude_zero = a.exclude_zero || b.exclude_zero;
  out.positive_orthant = a.positive_orthant && b.positive_orthant;
  const auto w = idx(out.width());
  const auto d = idx(a.dim);
  for (const auto& r : a.rows) {
    Vector c = Vector::Zero(w);
    c.head(d + idx(a.aux())) = r.coeffs;
    out.rows.push_back(ConeRow{std::move(c), r.rel});
  }
  for (const auto& r : b.rows) {
    Vector c = Vector::Zero(w);
    c.head(d) = r.coeffs.head(d);
    c.tail(idx(b.aux())) = r.coeffs.tail(idx(b.aux()));
    out.rows.push_back(ConeRow{std::move(c), r.rel});
  }
  return out;
}

std::vector<Cell> sum_cells(std::size_t dim, const std::vector<std::vector<Cell>>& parts,
                            const std::vector<Matrix>& embeds, std::size_t budget) {
  if (parts.size() != embeds.size()) throw DimensionError("one embedding per part expected");
  // Alternatives per part: a cell of D_k ∪ {0}, or nullptr for g_k = 0.
  std::vector<std::vector<const Cell*>> alts(parts.size());
  std::size_t total = 1;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (static_cast<std::size_t>(embeds[k].rows()) != dim) throw DimensionError("part embedding has wrong shape");
    bool zero_covered = false;
    for (const auto& c : parts[k]) {
      if (c.positive_orthant) continue;
      if (!c.has_strict()) zero_covered = true;
      alts[k].push_back(&c);
    }
    if (!zero_covered) alts[k].push_back(nullptr);
    if (total > budget / alts[k].size()) throw BudgetExceeded("signature enumeration exceeds budget");
    total *= alts[k].size();
  }

  std::vector<Cell> out;
  out.reserve(total);
  std::vector<std::size_t> choice(parts.size(), 0);
  const auto d = idx(dim);
  for (std::size_t s = 0; s < total; ++s) {
    Cell cell;
    cell.dim = dim;
    cell.exclude_zero = true;
    // Column offset of each chosen part inside the aux block.
    std::vector<std::size_t> offset(parts.size(), 0);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      offset[k] = cell.aux();
      const Cell* c = alts[k][choice[k]];
      if (!c) continue;
      if (c->generators) {
        cell.aux_nonneg.insert(cell.aux_nonneg.end(), c->generators->size(), true);
      } else {
        cell.aux_nonneg.insert(cell.aux_nonneg.end(), c->dim, false);
        cell.aux_nonneg.insert(cell.aux_nonneg.end(), c->aux_nonneg.begin(), c->aux_nonneg.end());
      }
    }
    const auto w = idx(cell.width());
    Matrix dominance = Matrix::Zero(d, w);
    dominance.leftCols(d) = Matrix::Identity(d, d);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const Cell* c = alts[k][choice[k]];
      if (!c) continue;
      const auto off = d + idx(offset[k]);
      if (c->generators) {
        for (std::size_t j = 0; j < c->generators->size(); ++j)
          dominance.col(off + idx(j)) = -(embeds[k] * (*c->generators)[j]);
      } else {
        dominance.block(0, off, d, embeds[k].cols()) = -embeds[k];
        for (const auto& r : c->rows) {
          Vector row = Vector::Zero(w);
          row.segment(off, idx(c->width())) = r.coeffs;
          cell.rows.push_back(ConeRow{std::move(row), r.rel});
        }
      }
    }
    for (Eigen::Index x = 0; x < d; ++x) cell.rows.push_back(ConeRow{dominance.row(x).transpose(), Relation::GreaterEq});
    if (cell.aux() == 0) {
      cell.positive_orthant = true;
      cell.exclude_zero = false;
      cell.rows.push_back(ConeRow{Vector::Ones(d), Relation::Greater});
    }
    out.push_back(std::move(cell));

    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (++choice[k] < alts[k].size()) break;
      choice[k] = 0;
    }
  }
  return out;
}

bool cell_contains(const Cell& cell, const Vector& f) {
  if (static_cast<std::size_t>(f.size()) != cell.dim) throw DimensionError("gamble has wrong dimension for cell");
  if (cell.exclude_zero && is_zero_vector(f)) return false;
  if (cell.aux() == 0) {
    for (const auto& r : cell.rows)
      if (!relation_holds(eval_row(r.coeffs, f), r.rel)) return false;
    return true;
  }
  if (cell.generators) {
    if (all_nonnegative(f)) return true;
    for (const auto& g : *cell.generators)
      if (all_nonnegative(f - g)) return true;
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < cell.aux(); ++j) names.push_back("a" + std::to_string(j));
  LinSystem sys(std::move(names), cell.aux_nonneg);
  const auto a = idx(cell.aux());
  for (const auto& r : cell.rows) sys.add(r.coeffs.tail(a), r.rel, -eval_row(r.coeffs, f));
  return strict_feasible(sys).has_value();
}

LineSup cell_line_sup(const Cell& cell, const Vector& f0, const Vector& d) {
  LineSup out;
  LinSystem sys = line_system(cell, f0, d);

  // The zero gamble sits on the line at most once, at μ0.
  std::optional<Rational> mu0;
  if (cell.exclude_zero) {
    Eigen::Index i = 0;
    while (i < d.size() && d(i) == 0) ++i;
    if (i == d.size()) {
      if (is_zero_vector(f0)) return out;
    } else {
      const Rational m = -f0(i) / d(i);
      if (is_zero_vector(f0 + m * d)) mu0 = m;
    }
  }
  auto open_feasible = [&](const LinSystem& base) -> bool {
    if (!mu0) return strict_feasible(base).has_value();
    for (int side : {1, -1}) {
      LinSystem s = base;
      Vector c = Vector::Zero(idx(s.num_vars()));
      c(0) = side;
      s.add(std::move(c), Relation::Greater, *mu0 * side);
      if (strict_feasible(s)) return true;
    }
    return false;
  };
  if (!open_feasible(sys)) return out;
  out.feasible = true;

  LinSystem closed = sys;
  for (auto& r : closed.rows)
    if (r.rel == Relation::Greater) r.rel = Relation::GreaterEq;
  Vector obj = Vector::Zero(idx(closed.num_vars()));
  obj(0) = 1;
  closed.maximize(obj);
  const auto res = solve(closed);
  if (std::holds_alternative<Unbounded>(res)) {
    out.unbounded = true;
    return out;
  }
  const auto* opt = std::get_if<Optimal>(&res);
  if (!opt) throw EngineBug("closure of a nonempty cell reported infeasible");
  out.value = opt->value;

  if (!(mu0 && *mu0 == out.value)) {
    LinSystem fixed = sys;
    Vector c = Vector::Zero(idx(fixed.num_vars()));
    c(0) = 1;
    fixed.add(std::move(c), Relation::Equal, out.value);
    out.attained = strict_feasible(fixed).has_value();
  }
  return out;
}

std::optional<Vector> positive_certificate(std::size_t dim, const std::vector<Vector>& gens) {
  LinSystem sys(dim);
  for (std::size_t x = 0; x < dim; ++x) sys.add(unit(dim, x), Relation::Greater);
  for (const auto& g : gens) sys.add(g, Relation::Greater);
  auto p = strict_feasible_homogenized(sys);
  if (!p) return std::nullopt;
  *p /= p->sum();
  return p;
}

std::optional<Vector> nonpositive_combination(std::size_t dim, const std::vector<Vector>& gens) {
  if (gens.empty()) return std::nullopt;
  const std::size_t k = gens.size();
  LinSystem sys(std::vector<std::string>(k, "l"), std::vector<bool>(k, true));
  for (std::size_t j = 0; j < k; ++j) sys.var_names[j] = "l" + std::to_string(j);
  sys.add(Vector::Ones(idx(k)), Relation::Equal, 1);
  for (std::size_t x = 0; x < dim; ++x) {
    Vector row(idx(k));
    for (std::size_t j = 0; j < k; ++j) row(idx(j)) = -gens[j](idx(x));
    sys.add(std::move(row), Relation::GreaterEq, 0);
  }
  const auto res = solve(sys);
  if (const auto* f = std::get_if<Feasible>(&res)) return f->witness;
  return std::nullopt;
}

}  // namespace sdg
