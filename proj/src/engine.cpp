#include "vinfer/engine.hpp"

#include <algorithm>

#include "vinfer/emotions.hpp"

namespace vinfer {

ValueVerdicts verdicts_of(const std::vector<Argument>& arguments,
                          const Labelling& labelling) {
  ValueVerdicts v;
  std::set<Literal> mentioned;
  for (const auto& arg : arguments) {
    mentioned.insert(arg.value);
    if (labelling.at(arg.id()) != Label::In) continue;
    if (arg.polarity == Argument::Polarity::Supports) {
      v.believed.insert(arg.value);
    } else {
      v.believed_not.insert(arg.value);
    }
  }
  for (const auto& value : mentioned) {
    if (!v.believed.contains(value) && !v.believed_not.contains(value)) {
      v.undecided.insert(value);
    }
  }
  return v;
}

Session::Session(std::string expresser, std::set<BackgroundRule> rules)
    : expresser_(std::move(expresser)), rules_(std::move(rules)) {}

ObserveDelta Session::observe(const Observation& o) {
  if (!history_.empty() && o.index <= history_.back().index) {
    throw SessionError("observation index " + std::to_string(o.index) +
                       " is not greater than the last index " +
                       std::to_string(history_.back().index));
  }

  ObserveDelta delta;
  ArgumentBatch batch = arguments_for(rules_, o);
  delta.notes = std::move(batch.notes);
  delta.new_arguments = std::move(batch.arguments);

  // New attacks touch at least one new argument; mutual same-event attacks
  // arise only within the batch, blocking attacks also across it.
  for (const auto& a : delta.new_arguments) {
    for (const auto& b : arguments_) {
      if (attacks_argument(a, b)) delta.new_attacks.emplace_back(a.id(), b.id());
      if (attacks_argument(b, a)) delta.new_attacks.emplace_back(b.id(), a.id());
    }
    for (const auto& b : delta.new_arguments) {
      if (attacks_argument(a, b)) delta.new_attacks.emplace_back(a.id(), b.id());
    }
  }
  std::sort(delta.new_attacks.begin(), delta.new_attacks.end());
  delta.new_attacks.erase(
      std::unique(delta.new_attacks.begin(), delta.new_attacks.end()),
      delta.new_attacks.end());

  history_.push_back(o);
  for (const auto& a : delta.new_arguments) {
    afv_.arguments.insert(a.id());
    arguments_.push_back(a);
  }
  std::sort(arguments_.begin(), arguments_.end(),
            [](const Argument& a, const Argument& b) { return a.id() < b.id(); });
  afv_.attacks.insert(delta.new_attacks.begin(), delta.new_attacks.end());
  labelling_ = grounded(afv_);

  return delta;
}

ValueVerdicts Session::verdicts() const { return verdicts_of(arguments_, labelling_); }

ValueVerdicts Trace::final_verdicts() const {
  return steps.empty() ? ValueVerdicts{} : steps.back().verdicts;
}

namespace {

Expression resolve_auto(const Scenario& sc, const ScriptedEvent& ev,
                        const AutoExpression& aut) {
  std::vector<EmotionKind> probe;
  if (aut.kind) {
    probe = {*aut.kind};
  } else {
    probe = {EmotionKind::Joy, EmotionKind::Distress};
  }
  for (EmotionKind kind : probe) {
    auto found = witnesses(sc.model, ev.state, {sc.expresser, kind, ev.action});
    if (found.empty()) continue;
    if (sc.disclose_full() && found.size() == 1) {
      return Expression::complete(kind, *found.begin());
    }
    return Expression::incomplete(kind);
  }
  // No emotion held. Absence of distress is the informative record under
  // destroyed-consequence rules, so it is the default for a bare auto.
  return Expression::absent(aut.kind.value_or(EmotionKind::Distress));
}

void check_consistency(const Scenario& sc, const ScriptedEvent& ev,
                       const Expression& expr) {
  switch (expr.form) {
    case Expression::Form::Complete: {
      CompleteEmotion e{sc.expresser, expr.kind, ev.action, *expr.value};
      if (!holds_complete(sc.model, ev.state, e)) {
        throw ConsistencyError(
            ev.index, "obs " + std::to_string(ev.index) + ": scripted expression '" +
                          expr.str() + "' does not hold at state '" + ev.state + "'");
      }
      return;
    }
    case Expression::Form::Incomplete: {
      IncompleteEmotion e{sc.expresser, expr.kind, ev.action};
      if (!holds_incomplete(sc.model, ev.state, e)) {
        throw ConsistencyError(
            ev.index, "obs " + std::to_string(ev.index) + ": scripted expression '" +
                          expr.str() + "' does not hold at state '" + ev.state + "'");
      }
      return;
    }
    case Expression::Form::Absent: {
      IncompleteEmotion e{sc.expresser, expr.kind, ev.action};
      if (holds_incomplete(sc.model, ev.state, e)) {
        throw ConsistencyError(ev.index,
                               "obs " + std::to_string(ev.index) + ": scripted '" +
                                   expr.str() + "' but the emotion holds at state '" +
                                   ev.state + "'");
      }
      return;
    }
  }
}

}  // namespace

Trace simulate(const Scenario& sc) {
  Session session(sc.expresser, sc.rules);
  Trace trace;
  for (const auto& ev : sc.script) {
    Expression expr;
    if (const auto* aut = std::get_if<AutoExpression>(&ev.expression)) {
      expr = resolve_auto(sc, ev, *aut);  // consistent by construction
    } else {
      expr = std::get<Expression>(ev.expression);
      check_consistency(sc, ev, expr);
    }
    Observation o{ev.index, ev.state, sc.expresser, ev.action, expr};
    ObserveDelta delta = session.observe(o);
    trace.steps.push_back({std::move(o), std::move(delta), session.verdicts()});
  }
  return trace;
}

}  // namespace vinfer
