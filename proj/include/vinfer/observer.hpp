#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vinfer/emotions.hpp"
#include "vinfer/literal.hpp"

namespace vinfer {

/// Defeasible knowledge: the action usually brings about the consequence.
struct BackgroundRule {
  std::string action;
  Literal consequence;

  auto operator<=>(const BackgroundRule&) const = default;
};

/// What the observer saw the expresser express at one event: a complete
/// emotion, an incomplete one, or the explicit absence of an emotion kind.
/// Absence is always an explicit record, never inferred from silence.
struct Expression {
  enum class Form { Complete, Incomplete, Absent };

  Form form;
  EmotionKind kind;
  std::optional<Literal> value;  // set iff form == Complete

  static Expression complete(EmotionKind kind, Literal value);
  static Expression incomplete(EmotionKind kind);
  static Expression absent(EmotionKind kind);

  /// Surface syntax: "joy(v)", "distress?", "none(joy)".
  std::string str() const;

  bool operator==(const Expression&) const = default;
};

/// Time-indexed observation event.
struct Observation {
  int index = 0;
  std::string state;
  std::string expresser;
  std::string action;
  Expression expression;

  bool operator==(const Observation&) const = default;
};

/// Supports or opposes ascribing a value to the expresser, anchored to the
/// observation it was constructed from.
struct Argument {
  enum class Polarity { Supports, Opposes };

  Polarity polarity;
  Literal value;
  int obs_index = 0;
  std::string action;
  EmotionKind kind;

  /// Canonical id, unique per (polarity, value, obs_index):
  /// "sup_p_have_coffee_1", "opp_n_spilled_2". The p/n marker carries the
  /// literal's polarity so negated atoms cannot collide with atom names.
  std::string id() const;

  bool operator==(const Argument&) const = default;
};

/// The value an emotion of `kind` about a rule consequence speaks for:
/// joy supports the consequence itself, distress the literal it destroyed.
Literal candidate_value(EmotionKind kind, const Literal& consequence);

/// Arguments constructed from one observation, plus diagnostic notes (an
/// incomplete or absent expression whose action has no rules yields none).
struct ArgumentBatch {
  std::vector<Argument> arguments;  // sorted by id, deduplicated
  std::vector<std::string> notes;
};

ArgumentBatch arguments_for(const std::set<BackgroundRule>& rules,
                            const Observation& observation);

/// All arguments over a history: per observation, an incomplete expression
/// yields one supporting argument per matching rule, a complete expression
/// exactly one supporting argument for its value, and an absent expression
/// one opposing argument per matching rule. Deduplicated by id.
std::vector<Argument> build_arguments(const std::set<BackgroundRule>& rules,
                                      const std::vector<Observation>& history);

}  // namespace vinfer
