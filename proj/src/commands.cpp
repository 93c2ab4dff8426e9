#include "sdg/commands.hpp"

#include "sdg/deso.hpp"
#include "sdg/error.hpp"
#include "sdg/fixtures.hpp"
#include "sdg/independence.hpp"
#include "sdg/maximal.hpp"
#include "sdg/previsions.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace sdg {

namespace {

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

// A report carries both renderings; the text one is line oriented.
struct Report {
  Json json = Json::object();
  std::vector<std::string> lines;
  int exit_code = kPass;

  void line(std::string s) { lines.push_back(std::move(s)); }
  CommandResult finish(bool as_json) const {
    CommandResult r;
    r.exit_code = exit_code;
    if (as_json) {
      Json j = json;
      j["exit_code"] = exit_code;
      r.output = j.dump(2) + "\n";
    } else {
      for (const auto& l : lines) r.output += l + "\n";
    }
    return r;
  }
};

int tri_exit(Tri t) {
  switch (t) {
    case Tri::In: return kPass;
    case Tri::Out: return kFail;
    case Tri::Unknown: return kUnknown;
  }
  return kError;
}

void need(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n + 1) throw Error("usage: " + usage);
}

Limits limits_from(const CommandOptions& opts) {
  Limits l;
  if (opts.budget) l.signatures = l.vertex_bases = l.combinations = l.block_pairs = *opts.budget;
  return l;
}

SampleConfig sampling_from(const CommandOptions& opts) {
  SampleConfig cfg;
  cfg.seed = opts.seed;
  return cfg;
}

Json check_json(const AxiomCheck& c) {
  Json j{{"pass", c.pass}, {"method", c.method}};
  if (c.counterexample) j["counterexample"] = vector_json(c.counterexample->values());
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

void add_audit(Report& rep, const AuditReport& a) {
  rep.json["audit"] = Json{{"D1", check_json(a.d1)}, {"D2", check_json(a.d2)}, {"D3", check_json(a.d3)}};
  std::istringstream in(a.str());
  for (std::string l; std::getline(in, l);) rep.line("  " + l);
  if (!a.pass()) rep.exit_code = kFail;
}

Report cmd_check(const std::vector<std::string>& args, const Model& m, const CommandOptions& opts) {
  need(args, 1, "check <set>");
  const std::string& name = args[1];
  const DesirableSetExpr& E = m.set(name);
  Report rep;
  rep.json["command"] = "check";
  rep.json["set"] = name;
  if (const auto* A = E.as_generators()) {
    const AnpResult r = avoids_nonpositivity(*A);
    rep.json["avoids_nonpositivity"] = r.avoids;
    if (r.avoids) {
      rep.json["certificate"] = vector_json(*r.certificate);
      rep.line(name + ": coherent natural extension; certificate p=" + to_string(*r.certificate));
    } else {
      rep.json["lambda"] = vector_json(*r.lambda);
      rep.line(name + " fails: lambda=" + to_string(*r.lambda) + " yields a combination <= 0");
      rep.exit_code = kFail;
    }
    return rep;
  }
  if (const auto* C = E.as_cells()) {
    rep.line(name + ": cell set audit");
    add_audit(rep, cellset_coherence_audit(*C, sampling_from(opts), E.limits()));
  } else if (const auto* M = E.as_lex()) {
    rep.line(name + ": lex system audit");
    add_audit(rep, lex_coherence_audit(*M));
    rep.json["maximal"] = lex_is_maximal(*M);
    rep.line(std::string("  maximal: ") + (lex_is_maximal(*M) ? "yes" : "no"));
  } else if (E.incoherent()) {
    rep.json["avoids_nonpositivity"] = false;
    rep.line(name + " fails: an assessment below it does not avoid non-positivity");
    rep.exit_code = kFail;
    return rep;
  } else {
    rep.line(name + ": sampled audit of " + E.describe());
    add_audit(rep, sampled_coherence_audit(E, sampling_from(opts)));
  }
  rep.json["pass"] = rep.exit_code == kPass;
  rep.line(rep.exit_code == kPass ? "pass" : "FAIL");
  return rep;
}

Report cmd_member(const std::vector<std::string>& args, const Model& m, const CommandOptions&) {
  need(args, 2, "member <set> <gamble>");
  const DesirableSetExpr& E = m.set(args[1]);
  const Gamble f = parse_gamble(args[2], E.scope());
  const Tri t = E.member(f);
  Report rep;
  rep.json = Json{{"command", "member"}, {"set", args[1]}, {"gamble", vector_json(f.values())}, {"verdict", to_string(t)}};
  rep.line(to_string(t));
  rep.exit_code = tri_exit(t);
  return rep;
}

Report prevision_report(const std::string& command, const DesirableSetExpr& E, const Gamble& f) {
  const PrevisionValue v = lower_prevision_detail(E, f);
  const Rational upper = upper_prevision(E, f);
  Report rep;
  rep.json = Json{{"command", command},
                  {"gamble", vector_json(f.values())},
                  {"lower", to_string(v.value)},
                  {"upper", to_string(upper)},
                  {"attained", v.attained}};
  rep.line("lower " + to_string(v.value) + (v.attained ? "" : " (supremum not attained)"));
  rep.line("upper " + to_string(upper));
  return rep;
}

Report cmd_lowprev(const std::vector<std::string>& args, const Model& m, const CommandOptions&) {
  need(args, 2, "lowprev <set> <gamble>");
  const DesirableSetExpr& E = m.set(args[1]);
  Report rep = prevision_report("lowprev", E, parse_gamble(args[2], E.scope()));
  rep.json["set"] = args[1];
  return rep;
}

Report cmd_condlowprev(const std::vector<std::string>& args, const Model& m, const CommandOptions&) {
  need(args, 3, "condlowprev <set> <X=x,...> <gamble>");
  const DesirableSetExpr& E = m.set(args[1]);
  const Outcome x = parse_assignment(args[2], E.scope());
  const DesirableSetExpr cond = DesirableSetExpr::condition(E, x);
  Report rep = prevision_report("condlowprev", cond, parse_gamble(args[3], cond.scope()));
  rep.json["set"] = args[1];
  rep.json["given"] = x.str();
  return rep;
}

Report verdict_report(const std::string& command, const Verdict& v) {
  Report rep;
  rep.json = Json{{"command", command}, {"verdict", v.label()}, {"checks", v.checks}};
  if (v.counterexample) rep.json["counterexample"] = vector_json(v.counterexample->values());
  if (v.at) rep.json["at"] = v.at->str();
  if (!v.detail.empty()) rep.json["detail"] = v.detail;
  rep.line(v.str());
  rep.exit_code = v.pass ? kPass : kFail;
  return rep;
}

Report cmd_irr_check(const std::vector<std::string>& args, const Model& m, const CommandOptions& opts) {
  need(args, 3, "irr-check <set> <I> <O>");
  const DesirableSetExpr& E = m.set(args[1]);
  const Scope I = parse_scope(args[2], E.scope()), O = parse_scope(args[3], E.scope());
  Report rep = verdict_report("irr-check", is_irrelevant(E, I, O, sampling_from(opts)));
  rep.json["set"] = args[1];
  return rep;
}

Report cmd_indep_check(const std::vector<std::string>& args, const Model& m, const CommandOptions& opts) {
  need(args, 2, "indep-check <set> <blocks, e.g. X1|X2,X3>");
  const DesirableSetExpr& E = m.set(args[1]);
  std::vector<Scope> blocks;
  for (const auto& b : split(args[2], '|')) blocks.push_back(parse_scope(b, E.scope()));
  Report rep = verdict_report("indep-check", is_independent(E, blocks, sampling_from(opts)));
  rep.json["set"] = args[1];
  return rep;
}

const LexSystem& lex_named(const Model& m, const std::string& name) {
  const auto* M = m.set(name).as_lex();
  if (!M) throw Error("'" + name + "' is not a lex system");
  return *M;
}

Report cmd_witness(const std::vector<std::string>& args, const Model& m, const CommandOptions&) {
  need(args, 2, "witness-nonmaximal <M1> <M2>");
  const Gamble h = nonmaximality_witness(lex_named(m, args[1]), lex_named(m, args[2]));
  Report rep;
  rep.json = Json{{"command", "witness-nonmaximal"}, {"witness", vector_json(h.values())}, {"verified", true}};
  rep.line("witness h=" + h.str() + " on " + h.scope().str());
  rep.line("h and -h are both rejected by the independent product");
  return rep;
}

Report cmd_strong_member(const std::vector<std::string>& args, const Model& m, const CommandOptions&) {
  if (args.size() < 3) throw Error("usage: strong-member <sets...> <gamble>");
  std::vector<DesirableSetExpr> factors;
  Json names = Json::array();
  for (std::size_t i = 1; i + 1 < args.size(); ++i) {
    factors.push_back(m.set(args[i]));
    names.push_back(args[i]);
  }
  const auto prod = DesirableSetExpr::strong_product(factors);
  const Gamble f = parse_gamble(args.back(), prod.scope());
  const Tri t = strong_member(factors, f);
  Report rep;
  rep.json = Json{{"command", "strong-member"}, {"sets", names}, {"gamble", vector_json(f.values())}, {"verdict", to_string(t)}};
  rep.line(to_string(t));
  rep.exit_code = tri_exit(t);
  return rep;
}

Report cmd_suite(const std::vector<std::string>& args, const CommandOptions& opts) {
  need(args, 0, "paper-suite");
  const auto checks = fixtures::run_suite(sampling_from(opts));
  Report rep;
  rep.json["command"] = "paper-suite";
  rep.json["checks"] = Json::array();
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.group.size() + c.name.size() + 3);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    rep.json["checks"].push_back(Json{{"group", c.group}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::string label = c.group + " / " + c.name;
    label.resize(width, ' ');
    rep.line(std::string(c.pass ? "PASS  " : "FAIL  ") + label + (c.detail.empty() ? "" : "  " + c.detail));
    if (!c.pass) ++failed;
  }
  rep.line(std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed");
  rep.json["failed"] = failed;
  rep.exit_code = failed == 0 ? kPass : kFail;
  return rep;
}

Report cmd_describe(const std::vector<std::string>& args, const Model& m, const CommandOptions&) {
  Report rep;
  rep.json["command"] = "describe";
  if (args.size() == 1) {
    rep.json["sets"] = m.names();
    for (const auto& n : m.names()) {
      const auto& e = m.entry(n);
      if (const auto* x = std::get_if<DesirableSetExpr>(&e)) rep.line(n + ": " + x->describe());
      else rep.line(n + ": conditional family on " + std::get<ConditionalFamily>(e).given().str());
    }
    return rep;
  }
  need(args, 1, "describe [set]");
  const DesirableSetExpr& E = m.set(args[1]);
  rep.json["set"] = args[1];
  rep.json["expression"] = E.describe();
  Json order = Json::array();
  for (std::size_t i = 0; i < E.scope().size(); ++i) order.push_back(E.scope().label(i));
  rep.json["outcomes"] = order;
  rep.line(args[1] + ": " + E.describe());
  rep.line("gamble entries in order:");
  for (std::size_t i = 0; i < E.scope().size(); ++i) rep.line("  [" + std::to_string(i) + "] " + E.scope().label(i));
  return rep;
}

using Handler = std::function<Report(const std::vector<std::string>&, const Model&, const CommandOptions&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"check", cmd_check},          {"member", cmd_member},           {"lowprev", cmd_lowprev},
      {"condlowprev", cmd_condlowprev}, {"irr-check", cmd_irr_check},  {"indep-check", cmd_indep_check},
      {"witness-nonmaximal", cmd_witness}, {"strong-member", cmd_strong_member}, {"describe", cmd_describe},
  };
  return table;
}

CommandResult error_result(const std::string& message, const CommandOptions& opts) {
  Report rep;
  rep.exit_code = kError;
  rep.json["error"] = message;
  rep.line("error: " + message);
  return rep.finish(opts.json);
}

}  // namespace

Gamble parse_gamble(const std::string& text, const Scope& scope) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("gamble '" + text + "' has an unclosed bracket");
    body = body.substr(1, body.size() - 2);
  }
  const auto parts = split(body, ',');
  if (parts.size() != scope.size())
    throw DimensionError("gamble has " + std::to_string(parts.size()) + " entries but " + scope.str() + " has " +
                         std::to_string(scope.size()) + " outcomes");
  Vector v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_rational(parts[i]);
  return Gamble(scope, v);
}

Outcome parse_assignment(const std::string& text, const Scope& universe) {
  std::map<std::string, std::string> assignment;
  std::vector<std::string> ids;
  if (!trim(text).empty()) {
    for (const auto& part : split(text, ',')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw ParseError("expected X=x in '" + part + "'");
      const std::string id = trim(part.substr(0, eq));
      if (assignment.count(id)) throw ParseError("variable '" + id + "' assigned twice");
      assignment[id] = trim(part.substr(eq + 1));
      ids.push_back(id);
    }
  }
  return make_outcome(universe.select(ids), assignment);
}

Scope parse_scope(const std::string& text, const Scope& universe) {
  if (trim(text).empty()) return Scope();
  return universe.select(split(text, ','));
}

CommandResult run_command(const std::vector<std::string>& args, const Model& model, const CommandOptions& opts) {
  try {
    if (args.empty()) throw Error("no command given");
    if (args[0] == "paper-suite") return cmd_suite(args, opts).finish(opts.json);
    auto it = handlers().find(args[0]);
    if (it == handlers().end()) throw Error("unknown command '" + args[0] + "'");
    return it->second(args, model, opts).finish(opts.json);
  } catch (const std::exception& e) {
    return error_result(e.what(), opts);
  }
}

CommandResult run_command(const std::vector<std::string>& args, const CommandOptions& opts) {
  try {
    if (!args.empty() && args[0] == "paper-suite") return cmd_suite(args, opts).finish(opts.json);
    if (!opts.model_path) throw Error("this command needs --model <path>");
    const Model model = Model::load(*opts.model_path, limits_from(opts));
    return run_command(args, model, opts);
  } catch (const std::exception& e) {
    return error_result(e.what(), opts);
  }
}

}  // namespace sdg
