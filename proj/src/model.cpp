#include "sdg/model.hpp"

#include "sdg/error.hpp"

#include <fstream>
#include <sstream>

namespace sdg {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a string");
  return j.get<std::string>();
}

Rational rational_at(const Json& j, const std::string& path) {
  if (j.is_number_float()) throw FloatRejected(path + ": floating-point number " + j.dump() + " rejected");
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError(path + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const FloatRejected& e) {
    throw FloatRejected(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Vector vector_at(const Json& j, std::size_t length, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of rationals");
  if (j.size() != length)
    throw DimensionError(path + ": expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  Vector v(static_cast<Eigen::Index>(length));
  for (std::size_t i = 0; i < length; ++i) v(static_cast<Eigen::Index>(i)) = rational_at(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

std::vector<Vector> vectors_at(const Json& j, std::size_t length, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_at(j[i], length, path + "[" + std::to_string(i) + "]"));
  return out;
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

std::vector<std::string> ids_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of variable ids");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Relation relation_at(const Json& j, const std::string& path) {
  const std::string s = string_at(j, path);
  if (s == ">=") return Relation::GreaterEq;
  if (s == ">") return Relation::Greater;
  if (s == "=") return Relation::Equal;
  throw ParseError(path + ": unknown relation '" + s + "' (use \">=\", \">\" or \"=\")");
}

std::map<std::string, std::string> assignment_at(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object of variable -> outcome");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = string_at(it.value(), path + "." + it.key());
  return out;
}

Json assignment_json(const Outcome& x) {
  Json o = Json::object();
  const auto digits = x.scope.decode(x.index);
  for (std::size_t k = 0; k < x.scope.num_vars(); ++k) o[x.scope.vars()[k].id] = x.scope.vars()[k].outcomes[digits[k]];
  return o;
}

Json scope_json(const Scope& s) {
  Json a = Json::array();
  for (const auto& id : s.ids()) a.push_back(id);
  return a;
}

class Resolver {
 public:
  Resolver(const Json& sets, const Scope& universe, const Limits& limits)
      : sets_(sets), universe_(universe), limits_(limits) {}

  void resolve_all() {
    for (auto it = sets_.begin(); it != sets_.end(); ++it) resolve(it.key());
  }

  std::map<std::string, ModelEntry> entries;
  std::map<std::string, Json> canonical;

 private:
  const Json& sets_;
  const Scope& universe_;
  const Limits& limits_;
  std::vector<std::string> stack_;

  Scope scope_at(const Json& j, const std::string& path) {
    try {
      return universe_.select(ids_at(j, path));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ScopeError(path + ": " + e.what());
    }
  }

  const ModelEntry& resolve(const std::string& name) {
    if (auto it = entries.find(name); it != entries.end()) return it->second;
    for (const auto& s : stack_)
      if (s == name) {
        std::string cycle;
        for (const auto& t : stack_) cycle += t + " -> ";
        throw CycleError("reference cycle: " + cycle + name);
      }
    auto def = sets_.find(name);
    if (def == sets_.end()) {
      const std::string from = stack_.empty() ? "" : " (referenced from '" + stack_.back() + "')";
      throw ReferenceError("unknown set '" + name + "'" + from);
    }
    stack_.push_back(name);
    Json canon;
    ModelEntry e = build(*def, "sets." + name, canon);
    stack_.pop_back();
    canonical[name] = std::move(canon);
    return entries.emplace(name, std::move(e)).first->second;
  }

  DesirableSetExpr expr_ref(const Json& j, const std::string& path) {
    const std::string name = string_at(j, path);
    const ModelEntry& e = resolve(name);
    if (const auto* x = std::get_if<DesirableSetExpr>(&e)) return *x;
    throw Error(path + ": '" + name + "' is a conditional family, not a set");
  }

  ModelEntry build(const Json& def, const std::string& path, Json& canon) {
    const std::string kind = string_at(field(def, "kind", path), path + ".kind");
    canon = Json::object();
    canon["kind"] = kind;
    if (kind == "generators") {
      const Scope s = scope_at(field(def, "scope", path), path + ".scope");
      std::vector<Gamble> gens;
      for (auto& v : vectors_at(field(def, "gambles", path), s.size(), path + ".gambles")) gens.emplace_back(s, std::move(v));
      GeneratorSet A(s, gens);
      canon["scope"] = scope_json(s);
      canon["gambles"] = Json::array();
      for (const auto& g : A.gens()) canon["gambles"].push_back(vector_json(g.values()));
      return DesirableSetExpr::generators(std::move(A), limits_);
    }
    if (kind == "cells") {
      const Scope s = scope_at(field(def, "scope", path), path + ".scope");
      bool include_positive = false;
      if (def.contains("include_positive")) {
        if (!def["include_positive"].is_boolean()) throw ParseError(path + ".include_positive: expected a boolean");
        include_positive = def["include_positive"].get<bool>();
      }
      const Json& cells = field(def, "cells", path);
      if (!cells.is_array()) throw ParseError(path + ".cells: expected an array");
      std::vector<CellSpec> specs;
      Json cj = Json::array();
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::string cp = path + ".cells[" + std::to_string(c) + "]";
        CellSpec spec;
        if (cells[c].contains("exclude_zero")) {
          if (!cells[c]["exclude_zero"].is_boolean()) throw ParseError(cp + ".exclude_zero: expected a boolean");
          spec.excludes_zero = cells[c]["exclude_zero"].get<bool>();
        }
        const Json& rows = field(cells[c], "rows", cp);
        if (!rows.is_array()) throw ParseError(cp + ".rows: expected an array");
        Json rj = Json::array();
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const std::string rp = cp + ".rows[" + std::to_string(r) + "]";
          CellRow row{vector_at(field(rows[r], "functional", rp), s.size(), rp + ".functional"),
                      relation_at(field(rows[r], "rel", rp), rp + ".rel")};
          rj.push_back(Json{{"functional", vector_json(row.functional)}, {"rel", to_string(row.rel)}});
          spec.rows.push_back(std::move(row));
        }
        cj.push_back(Json{{"rows", rj}, {"exclude_zero", spec.excludes_zero}});
        specs.push_back(std::move(spec));
      }
      canon["scope"] = scope_json(s);
      canon["include_positive"] = include_positive;
      canon["cells"] = cj;
      return DesirableSetExpr::cells(CellSet(s, std::move(specs), include_positive), limits_);
    }
    if (kind == "lex") {
      const Scope s = scope_at(field(def, "scope", path), path + ".scope");
      auto levels = vectors_at(field(def, "levels", path), s.size(), path + ".levels");
      canon["scope"] = scope_json(s);
      canon["levels"] = Json::array();
      for (const auto& p : levels) canon["levels"].push_back(vector_json(p));
      try {
        return DesirableSetExpr::lex(LexSystem(s, std::move(levels)), limits_);
      } catch (const Error& e) {
        throw ParseError(path + ".levels: " + e.what());
      }
    }
    if (kind == "strict_from_credal") {
      const Scope s = scope_at(field(def, "scope", path), path + ".scope");
      auto points = vectors_at(field(def, "vertices", path), s.size(), path + ".vertices");
      std::optional<CredalSet> C;
      try {
        C.emplace(s, std::move(points));
      } catch (const Error& e) {
        throw ParseError(path + ".vertices: " + e.what());
      }
      canon["scope"] = scope_json(s);
      canon["vertices"] = Json::array();
      for (const auto& p : C->vertices()) canon["vertices"].push_back(vector_json(p));
      return DesirableSetExpr::cells(strictly_desirable(*C), limits_);
    }
    if (kind == "expr") return build_expr(def, path, canon);
    throw ParseError(path + ".kind: unknown set kind '" + kind + "'");
  }

  std::vector<DesirableSetExpr> factors_at(const Json& def, const std::string& path, Json& canon) {
    const Json& fs = field(def, "factors", path);
    if (!fs.is_array() || fs.empty()) throw ParseError(path + ".factors: expected a nonempty array of set names");
    std::vector<DesirableSetExpr> out;
    canon["factors"] = Json::array();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      out.push_back(expr_ref(fs[i], path + ".factors[" + std::to_string(i) + "]"));
      canon["factors"].push_back(fs[i]);
    }
    return out;
  }

  ModelEntry build_expr(const Json& def, const std::string& path, Json& canon) {
    const std::string op = string_at(field(def, "op", path), path + ".op");
    canon["op"] = op;
    try {
      if (op == "condition") {
        const DesirableSetExpr base = expr_ref(field(def, "base", path), path + ".base");
        const auto assignment = assignment_at(field(def, "given", path), path + ".given");
        std::vector<std::string> ids;
        for (const auto& [id, label] : assignment) ids.push_back(id);
        const Outcome x = make_outcome(universe_.select(ids), assignment);
        canon["base"] = def["base"];
        canon["given"] = assignment_json(x);
        return DesirableSetExpr::condition(base, x);
      }
      if (op == "cyl_ext") {
        const DesirableSetExpr base = expr_ref(field(def, "base", path), path + ".base");
        const Scope target = scope_at(field(def, "scope", path), path + ".scope");
        canon["base"] = def["base"];
        canon["scope"] = scope_json(target);
        return DesirableSetExpr::cyl_ext(base, target);
      }
      if (op == "irr_ext") {
        const DesirableSetExpr base = expr_ref(field(def, "base", path), path + ".base");
        const Scope I = scope_at(field(def, "irrelevant", path), path + ".irrelevant");
        const Scope target = scope_at(field(def, "scope", path), path + ".scope");
        canon["base"] = def["base"];
        canon["irrelevant"] = scope_json(I);
        canon["scope"] = scope_json(target);
        return DesirableSetExpr::irr_ext(base, I, target);
      }
      if (op == "inex") return DesirableSetExpr::indep_product(factors_at(def, path, canon));
      if (op == "strong") return DesirableSetExpr::strong_product(factors_at(def, path, canon));
      if (op == "intersection") return DesirableSetExpr::intersection(factors_at(def, path, canon));
      if (op == "conditional_family") return build_family(def, path, canon);
    } catch (const ScopeError& e) {
      throw ScopeError(path + ": " + e.what());
    }
    throw ParseError(path + ".op: unknown operator '" + op + "'");
  }

  ModelEntry build_family(const Json& def, const std::string& path, Json& canon) {
    const Scope Y = scope_at(field(def, "given", path), path + ".given");
    const Json& table = field(def, "table", path);
    if (!table.is_array()) throw ParseError(path + ".table: expected an array");
    std::vector<std::optional<DesirableSetExpr>> slots(Y.size());
    std::map<std::size_t, Json> rows;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string tp = path + ".table[" + std::to_string(i) + "]";
      const auto y = assignment_at(field(table[i], "y", tp), tp + ".y");
      const Outcome x = make_outcome(Y, y);
      if (slots[x.index]) throw ParseError(tp + ": duplicate entry for " + x.str());
      slots[x.index] = expr_ref(field(table[i], "set", tp), tp + ".set");
      rows[x.index] = Json{{"y", assignment_json(x)}, {"set", table[i]["set"]}};
    }
    canon["given"] = scope_json(Y);
    canon["table"] = Json::array();
    for (auto& [k, row] : rows) canon["table"].push_back(row);
    return ConditionalFamily(Y, std::move(slots));
  }
};

}  // namespace

Model Model::from_json(const Json& doc, const Limits& limits) {
  if (!doc.is_object()) throw ParseError("document: expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "variables" && it.key() != "sets") throw ParseError("document: unknown field '" + it.key() + "'");
  Model m;
  const Json& vars = field(doc, "variables", "document");
  if (!vars.is_array()) throw ParseError("variables: expected an array");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string p = "variables[" + std::to_string(i) + "]";
    VariableDecl v;
    v.id = string_at(field(vars[i], "id", p), p + ".id");
    v.outcomes = ids_at(field(vars[i], "outcomes", p), p + ".outcomes");
    m.variables_.push_back(std::move(v));
  }
  Scope universe;
  try {
    universe = Scope(m.variables_);
  } catch (const Error& e) {
    throw ScopeError(std::string("variables: ") + e.what());
  }
  m.variables_ = universe.vars();
  const Json& sets = doc.contains("sets") ? doc["sets"] : Json::object();
  if (!sets.is_object()) throw ParseError("sets: expected an object");
  Resolver r(sets, universe, limits);
  r.resolve_all();
  m.entries_ = std::move(r.entries);
  m.canonical_ = std::move(r.canonical);
  return m;
}

Model Model::parse(const std::string& text, const Limits& limits) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  return from_json(doc, limits);
}

Model Model::load(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str(), limits);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Scope Model::scope_of(const std::vector<std::string>& ids) const { return universe().select(ids); }

std::vector<std::string> Model::names() const {
  std::vector<std::string> out;
  for (const auto& [name, e] : entries_) out.push_back(name);
  return out;
}

const ModelEntry& Model::entry(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ReferenceError("unknown set '" + name + "'");
  return it->second;
}

const DesirableSetExpr& Model::set(const std::string& name) const {
  if (const auto* x = std::get_if<DesirableSetExpr>(&entry(name))) return *x;
  throw Error("'" + name + "' is a conditional family, not a set");
}

const ConditionalFamily& Model::family(const std::string& name) const {
  if (const auto* x = std::get_if<ConditionalFamily>(&entry(name))) return *x;
  throw Error("'" + name + "' is not a conditional family");
}

Json Model::to_json() const {
  Json doc = Json::object();
  doc["variables"] = Json::array();
  for (const auto& v : variables_) doc["variables"].push_back(Json{{"id", v.id}, {"outcomes", v.outcomes}});
  doc["sets"] = Json::object();
  for (const auto& [name, j] : canonical_) doc["sets"][name] = j;
  return doc;
}

}  // namespace sdg
