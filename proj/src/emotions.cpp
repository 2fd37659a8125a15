#include "vinfer/emotions.hpp"

namespace vinfer {

const char* to_string(EmotionKind kind) {
  return kind == EmotionKind::Joy ? "joy" : "distress";
}

Formula complete_emotion_formula(const CompleteEmotion& e) {
  const Literal& v = e.value;
  // Joy:      B_i(v  & <-a>~v) & Val_i(v)
  // Distress: B_i(~v & <-a>v)  & Val_i(v)
  Literal now = e.kind == EmotionKind::Joy ? v : v.complement();
  Literal before = now.complement();
  Formula believed = Formula::conjunction(
      Formula::lit(now), Formula::before_action(e.action, Formula::lit(before)));
  return Formula::conjunction(Formula::believes(e.agent, believed),
                              Formula::has_value(e.agent, v));
}

bool holds_complete(const WorldModel& model, const std::string& state,
                    const CompleteEmotion& e) {
  return eval(model, state, complete_emotion_formula(e));
}

bool holds_incomplete(const WorldModel& model, const std::string& state,
                      const IncompleteEmotion& e) {
  for (const auto& v : model.literal_universe()) {
    if (holds_complete(model, state, {e.agent, e.kind, e.action, v})) return true;
  }
  return false;
}

std::set<Literal> witnesses(const WorldModel& model, const std::string& state,
                            const IncompleteEmotion& e) {
  std::set<Literal> out;
  for (const auto& v : model.literal_universe()) {
    if (holds_complete(model, state, {e.agent, e.kind, e.action, v})) out.insert(v);
  }
  return out;
}

}  // namespace vinfer
