// JSON model documents: variables plus a table of named set definitions.
#ifndef SDG_MODEL_HPP
#define SDG_MODEL_HPP

#include "sdg/expr.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace sdg {

using Json = nlohmann::json;

/// A resolved set: either a plain expression or a family indexed by y.
using ModelEntry = std::variant<DesirableSetExpr, ConditionalFamily>;

class Model {
 public:
  /// Validates the whole document: scopes, rationals, references, cycles.
  static Model from_json(const Json& doc, const Limits& limits = {});
  static Model parse(const std::string& text, const Limits& limits = {});
  static Model load(const std::string& path, const Limits& limits = {});

  const std::vector<VariableDecl>& variables() const { return variables_; }
  Scope universe() const { return Scope(variables_); }
  /// Scope made of the named variables.
  Scope scope_of(const std::vector<std::string>& ids) const;

  std::vector<std::string> names() const;
  bool has(const std::string& name) const { return entries_.count(name) > 0; }
  const ModelEntry& entry(const std::string& name) const;
  /// Throws ReferenceError for unknown names and Error for families.
  const DesirableSetExpr& set(const std::string& name) const;
  const ConditionalFamily& family(const std::string& name) const;

  /// Canonical form: sorted keys, normalised rationals, sorted scopes.
  Json to_json() const;
  std::string serialize() const { return to_json().dump(2) + "\n"; }

 private:
  std::vector<VariableDecl> variables_;
  std::map<std::string, Json> canonical_;
  std::map<std::string, ModelEntry> entries_;
};

}  // namespace sdg

#endif  // SDG_MODEL_HPP
