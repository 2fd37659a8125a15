#include "vinfer/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vinfer {

const State* WorldModel::find_state(const std::string& id) const {
  for (const auto& s : states) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::vector<Literal> WorldModel::literal_universe() const {
  std::vector<Literal> out;
  out.reserve(atoms.size() * 2);
  for (const auto& a : atoms) {
    out.emplace_back(a, false);
    out.emplace_back(a, true);
  }
  return out;
}

std::set<std::string> WorldModel::epistemic_successors(const std::string& agent,
                                                       const std::string& state) const {
  std::set<std::string> out;
  auto it = epistemic.find(agent);
  if (it == epistemic.end()) return out;
  for (const auto& [from, to] : it->second) {
    if (from == state) out.insert(to);
  }
  return out;
}

const std::set<Literal>& WorldModel::values_at(const std::string& agent,
                                               const std::string& state) const {
  static const std::set<Literal> empty;
  auto it = values.find({agent, state});
  return it == values.end() ? empty : it->second;
}

Formula Formula::lit(Literal v) {
  return Formula(std::make_shared<Node>(Node{Kind::Lit, std::move(v), {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Node{Kind::Not, {}, {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<Node>(Node{Kind::And, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<Node>(Node{Kind::Or, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::believes(std::string agent, Formula f) {
  return Formula(
      std::make_shared<Node>(Node{Kind::Believes, {}, std::move(agent), {std::move(f)}}));
}

Formula Formula::before_action(std::string action, Formula f) {
  return Formula(std::make_shared<Node>(
      Node{Kind::BeforeAction, {}, std::move(action), {std::move(f)}}));
}

Formula Formula::has_value(std::string agent, Literal v) {
  return Formula(
      std::make_shared<Node>(Node{Kind::HasValue, std::move(v), std::move(agent), {}}));
}

std::string Formula::str() const {
  switch (kind()) {
    case Kind::Lit:
      return literal().str();
    case Kind::Not:
      return "!" + child().str();
    case Kind::And:
      return "(" + child(0).str() + " & " + child(1).str() + ")";
    case Kind::Or:
      return "(" + child(0).str() + " | " + child(1).str() + ")";
    case Kind::Believes:
      return "B[" + agent() + "](" + child().str() + ")";
    case Kind::BeforeAction:
      return "<-" + action() + ">(" + child().str() + ")";
    case Kind::HasValue:
      return "Val[" + agent() + "](" + literal().str() + ")";
  }
  return {};
}

namespace {

[[noreturn]] void undeclared(const char* what, const std::string& name) {
  throw ModelError(std::string("undeclared ") + what + " '" + name + "'");
}

const State& checked_state(const WorldModel& m, const std::string& id) {
  const State* s = m.find_state(id);
  if (s == nullptr) undeclared("state", id);
  return *s;
}

}  // namespace

std::set<std::string> predecessors(const WorldModel& model, const std::string& state,
                                   const std::string& action) {
  checked_state(model, state);
  if (!model.actions.contains(action)) undeclared("action", action);
  std::set<std::string> out;
  for (const auto& t : model.transitions) {
    if (t.target == state && t.action == action) out.insert(t.source);
  }
  return out;
}

bool eval(const WorldModel& model, const std::string& state, const Formula& formula) {
  const State& s = checked_state(model, state);
  switch (formula.kind()) {
    case Formula::Kind::Lit: {
      const Literal& v = formula.literal();
      if (!model.atoms.contains(v.atom)) undeclared("atom", v.atom);
      auto it = s.valuation.find(v.atom);
      if (it == s.valuation.end()) {
        throw ModelError("state '" + state + "' has no valuation for atom '" + v.atom + "'");
      }
      return it->second == v.positive;
    }
    case Formula::Kind::Not:
      return !eval(model, state, formula.child());
    case Formula::Kind::And:
      return eval(model, state, formula.child(0)) && eval(model, state, formula.child(1));
    case Formula::Kind::Or:
      return eval(model, state, formula.child(0)) || eval(model, state, formula.child(1));
    case Formula::Kind::Believes: {
      if (!model.agents.contains(formula.agent())) undeclared("agent", formula.agent());
      for (const auto& succ : model.epistemic_successors(formula.agent(), state)) {
        if (!eval(model, succ, formula.child())) return false;
      }
      return true;
    }
    case Formula::Kind::BeforeAction: {
      for (const auto& pred : predecessors(model, state, formula.action())) {
        if (eval(model, pred, formula.child())) return true;
      }
      return false;
    }
    case Formula::Kind::HasValue: {
      if (!model.agents.contains(formula.agent())) undeclared("agent", formula.agent());
      if (!model.atoms.contains(formula.literal().atom)) {
        undeclared("atom", formula.literal().atom);
      }
      return model.values_at(formula.agent(), state).contains(formula.literal());
    }
  }
  throw ModelError("unknown formula kind");
}

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (std::isalpha(static_cast<unsigned char>(name[0])) == 0 && name[0] != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

bool has_fatal(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::Fatal;
  });
}

namespace {

void check_names(const std::set<std::string>& names, const char* what,
                 std::vector<Diagnostic>& out) {
  for (const auto& n : names) {
    if (!is_identifier(n)) {
      out.push_back({Diagnostic::Severity::Fatal,
                     std::string("invalid ") + what + " name '" + n + "'"});
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const WorldModel& m) {
  std::vector<Diagnostic> out;
  auto fatal = [&out](std::string msg) {
    out.push_back({Diagnostic::Severity::Fatal, std::move(msg)});
  };
  auto warn = [&out](std::string msg) {
    out.push_back({Diagnostic::Severity::Warning, std::move(msg)});
  };

  check_names(m.atoms, "atom", out);
  check_names(m.agents, "agent", out);
  check_names(m.actions, "action", out);

  std::set<std::string> state_ids;
  for (const auto& s : m.states) {
    if (!is_identifier(s.id)) fatal("invalid state id '" + s.id + "'");
    if (!state_ids.insert(s.id).second) fatal("duplicate state id '" + s.id + "'");
    for (const auto& a : m.atoms) {
      if (!s.valuation.contains(a)) {
        fatal("state '" + s.id + "': valuation missing atom '" + a + "'");
      }
    }
    for (const auto& [a, _] : s.valuation) {
      if (!m.atoms.contains(a)) {
        fatal("state '" + s.id + "': valuation mentions undeclared atom '" + a + "'");
      }
    }
  }

  for (const auto& t : m.transitions) {
    std::ostringstream where;
    where << "transition " << t.source << " -" << t.action << "-> " << t.target;
    if (!state_ids.contains(t.source)) {
      fatal("undeclared state '" + t.source + "' in " + where.str());
    }
    if (!m.actions.contains(t.action)) {
      fatal("undeclared action '" + t.action + "' in " + where.str());
    }
    if (!state_ids.contains(t.target)) {
      fatal("undeclared state '" + t.target + "' in " + where.str());
    }
  }

  for (const auto& [agent, pairs] : m.epistemic) {
    if (!m.agents.contains(agent)) {
      fatal("undeclared agent '" + agent + "' in epistemic relation");
    }
    for (const auto& [from, to] : pairs) {
      if (!state_ids.contains(from)) {
        fatal("undeclared state '" + from + "' in epistemic relation of '" + agent + "'");
      }
      if (!state_ids.contains(to)) {
        fatal("undeclared state '" + to + "' in epistemic relation of '" + agent + "'");
      }
    }
  }

  for (const auto& [key, literals] : m.values) {
    const auto& [agent, state] = key;
    if (!m.agents.contains(agent)) {
      fatal("undeclared agent '" + agent + "' in value assignment");
    }
    if (!state_ids.contains(state)) {
      fatal("undeclared state '" + state + "' in value assignment of '" + agent + "'");
    }
    for (const auto& v : literals) {
      if (!m.atoms.contains(v.atom)) {
        fatal("undeclared atom '" + v.atom + "' in value assignment of '" + agent +
              "' at '" + state + "'");
      }
    }
  }

  // Non-serial epistemic relations make Believes vacuously true.
  for (const auto& agent : m.agents) {
    for (const auto& s : m.states) {
      if (m.epistemic_successors(agent, s.id).empty()) {
        warn("agent '" + agent + "': epistemic relation is non-serial at '" + s.id +
             "' (Believes holds vacuously there)");
      }
    }
  }

  return out;
}

}  // namespace vinfer
