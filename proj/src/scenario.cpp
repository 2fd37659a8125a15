#include "vinfer/scenario.hpp"

namespace vinfer {

std::string to_string(const ScriptedExpression& expression) {
  if (const auto* expr = std::get_if<Expression>(&expression)) return expr->str();
  const auto& aut = std::get<AutoExpression>(expression);
  if (aut.kind) return std::string("auto(") + to_string(*aut.kind) + ")";
  return "auto";
}

bool Scenario::disclose_full() const {
  auto it = options.find("disclose");
  return it != options.end() && it->second == "full";
}

std::vector<Diagnostic> validate_scenario(const Scenario& sc) {
  std::vector<Diagnostic> out = validate(sc.model);
  auto fatal = [&out](std::string msg) {
    out.push_back({Diagnostic::Severity::Fatal, std::move(msg)});
  };
  auto warn = [&out](std::string msg) {
    out.push_back({Diagnostic::Severity::Warning, std::move(msg)});
  };

  if (!sc.model.agents.contains(sc.observer)) {
    fatal("undeclared agent '" + sc.observer + "' as observer");
  }
  if (!sc.model.agents.contains(sc.expresser)) {
    fatal("undeclared agent '" + sc.expresser + "' as expresser");
  }
  if (sc.observer == sc.expresser) {
    fatal("observer and expresser must differ (both '" + sc.observer + "')");
  }

  for (const auto& rule : sc.rules) {
    if (!sc.model.actions.contains(rule.action)) {
      fatal("undeclared action '" + rule.action + "' in rule");
    }
    if (!sc.model.atoms.contains(rule.consequence.atom)) {
      fatal("undeclared atom '" + rule.consequence.atom + "' in rule for action '" +
            rule.action + "'");
    }
  }

  for (const auto& ev : sc.script) {
    std::string where = "obs " + std::to_string(ev.index);
    if (!sc.model.has_state(ev.state)) {
      fatal("undeclared state '" + ev.state + "' in " + where);
    }
    if (!sc.model.actions.contains(ev.action)) {
      fatal("undeclared action '" + ev.action + "' in " + where);
    }
    if (const auto* expr = std::get_if<Expression>(&ev.expression)) {
      if (expr->form == Expression::Form::Complete &&
          !sc.model.atoms.contains(expr->value->atom)) {
        fatal("undeclared atom '" + expr->value->atom + "' in " + where);
      }
    }
  }

  for (const auto& [key, value] : sc.options) {
    if (key != "disclose") {
      warn("unknown option '" + key + "'");
    } else if (value != "full" && value != "partial") {
      warn("option disclose: expected 'full' or 'partial', got '" + value + "'");
    }
  }

  return out;
}

}  // namespace vinfer
