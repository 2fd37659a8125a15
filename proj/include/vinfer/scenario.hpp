#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "vinfer/model.hpp"
#include "vinfer/observer.hpp"

namespace vinfer {

/// Expression synthesized from ground truth at simulation time. When a kind
/// is given, only that kind is probed; otherwise joy is tried before
/// distress, and a run where neither holds records the absence of distress.
struct AutoExpression {
  std::optional<EmotionKind> kind;

  bool operator==(const AutoExpression&) const = default;
};

using ScriptedExpression = std::variant<Expression, AutoExpression>;

std::string to_string(const ScriptedExpression& expression);

struct ScriptedEvent {
  int index = 0;
  std::string state;
  std::string action;
  ScriptedExpression expression;

  bool operator==(const ScriptedEvent&) const = default;
};

/// A world model bundled with the observer's standpoint: who observes whom,
/// the background rules, and the scripted observation events.
struct Scenario {
  WorldModel model;
  std::string observer;
  std::string expresser;
  std::set<BackgroundRule> rules;
  std::vector<ScriptedEvent> script;
  std::map<std::string, std::string> options;

  /// The "disclose" option: complete expressions are synthesized for
  /// uniquely-witnessed auto events only when set to "full".
  bool disclose_full() const;

  bool operator==(const Scenario&) const = default;
};

/// Model validation plus scenario-level checks: observer and expresser are
/// distinct declared agents, and rules and script reference declared ids.
std::vector<Diagnostic> validate_scenario(const Scenario& scenario);

}  // namespace vinfer
