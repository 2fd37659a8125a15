#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vinfer/literal.hpp"

namespace vinfer {

/// Raised when an operation references an id the model does not declare,
/// or when a state's valuation is not total.
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A state with a total valuation over the model's atoms.
struct State {
  std::string id;
  std::map<std::string, bool> valuation;

  bool operator==(const State&) const = default;
};

/// One action-labeled edge of the transition relation.
struct Transition {
  std::string source;
  std::string action;
  std::string target;

  auto operator<=>(const Transition&) const = default;
};

/// Multi-agent transition system: states with total valuations,
/// action-labeled transitions, one epistemic accessibility relation per
/// agent, and per-agent per-state value sets.
struct WorldModel {
  std::set<std::string> atoms;
  std::set<std::string> agents;
  std::set<std::string> actions;
  std::vector<State> states;
  std::set<Transition> transitions;
  // agent -> accessibility pairs (state, state)
  std::map<std::string, std::set<std::pair<std::string, std::string>>> epistemic;
  // (agent, state) -> value set
  std::map<std::pair<std::string, std::string>, std::set<Literal>> values;

  const State* find_state(const std::string& id) const;
  bool has_state(const std::string& id) const { return find_state(id) != nullptr; }

  /// The literal set L: both polarities of every declared atom.
  std::vector<Literal> literal_universe() const;

  /// States accessible from `state` for `agent`; empty when none declared.
  std::set<std::string> epistemic_successors(const std::string& agent,
                                             const std::string& state) const;

  /// Value set of `agent` at `state`; empty when no entry exists.
  const std::set<Literal>& values_at(const std::string& agent,
                                     const std::string& state) const;

  bool operator==(const WorldModel&) const = default;
};

/// Formulas of the modal language: literals, Boolean connectives, a belief
/// operator, a converse-action diamond ("held at some state from which this
/// action led here"), and the value predicate.
class Formula {
 public:
  enum class Kind { Lit, Not, And, Or, Believes, BeforeAction, HasValue };

  static Formula lit(Literal v);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula believes(std::string agent, Formula f);
  static Formula before_action(std::string action, Formula f);
  static Formula has_value(std::string agent, Literal v);

  Kind kind() const { return node_->kind; }
  const Literal& literal() const { return node_->lit; }    // Lit, HasValue
  const std::string& agent() const { return node_->name; } // Believes, HasValue
  const std::string& action() const { return node_->name; } // BeforeAction
  const Formula& child(std::size_t i = 0) const { return node_->children[i]; }
  std::size_t child_count() const { return node_->children.size(); }

  std::string str() const;

 private:
  struct Node {
    Kind kind;
    Literal lit;
    std::string name;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Evaluates `formula` at `state`. Believes quantifies universally over the
/// agent's accessible states; the converse-action diamond quantifies
/// existentially over action-predecessors. Throws ModelError on ids the
/// model does not declare.
bool eval(const WorldModel& model, const std::string& state, const Formula& formula);

/// Sources of action-labeled edges into `state`.
std::set<std::string> predecessors(const WorldModel& model, const std::string& state,
                                   const std::string& action);

struct Diagnostic {
  enum class Severity { Warning, Fatal };
  Severity severity;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

bool has_fatal(const std::vector<Diagnostic>& diagnostics);

/// Checks every structural invariant of the model. Fatal diagnostics name
/// the violated invariant and the offending id. Agents whose epistemic
/// relation is not serial get a non-fatal warning per state without a
/// successor (Believes holds vacuously there).
std::vector<Diagnostic> validate(const WorldModel& model);

/// Identifier syntax shared by atoms, agents, actions and state ids.
bool is_identifier(const std::string& name);

}  // namespace vinfer
