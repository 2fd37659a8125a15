#pragma once

#include <set>
#include <string>

#include "vinfer/model.hpp"

namespace vinfer {

enum class EmotionKind { Joy, Distress };

const char* to_string(EmotionKind kind);

/// Emotion indexed by both the triggering action and the value.
struct CompleteEmotion {
  std::string agent;
  EmotionKind kind;
  std::string action;
  Literal value;
};

/// Emotion indexed by the action only; a disjunction over candidate values.
struct IncompleteEmotion {
  std::string agent;
  EmotionKind kind;
  std::string action;
};

/// The defining state property of a complete emotion. Joy: the agent
/// believes the value holds now and did not hold before the action, and has
/// the value. Distress is the temporal mirror: a held value was destroyed.
Formula complete_emotion_formula(const CompleteEmotion& e);

bool holds_complete(const WorldModel& model, const std::string& state,
                    const CompleteEmotion& e);

/// True iff some literal of the model makes the complete emotion hold.
bool holds_incomplete(const WorldModel& model, const std::string& state,
                      const IncompleteEmotion& e);

/// All literals witnessing the incomplete emotion.
std::set<Literal> witnesses(const WorldModel& model, const std::string& state,
                            const IncompleteEmotion& e);

}  // namespace vinfer
