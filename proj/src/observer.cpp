#include "vinfer/observer.hpp"

#include <algorithm>

namespace vinfer {

Expression Expression::complete(EmotionKind kind, Literal value) {
  return {Form::Complete, kind, std::move(value)};
}

Expression Expression::incomplete(EmotionKind kind) {
  return {Form::Incomplete, kind, std::nullopt};
}

Expression Expression::absent(EmotionKind kind) {
  return {Form::Absent, kind, std::nullopt};
}

std::string Expression::str() const {
  switch (form) {
    case Form::Complete:
      return std::string(to_string(kind)) + "(" + value->str() + ")";
    case Form::Incomplete:
      return std::string(to_string(kind)) + "?";
    case Form::Absent:
      return std::string("none(") + to_string(kind) + ")";
  }
  return {};
}

std::string Argument::id() const {
  std::string out = polarity == Polarity::Supports ? "sup_" : "opp_";
  out += value.positive ? "p_" : "n_";
  out += value.atom;
  out += '_';
  out += std::to_string(obs_index);
  return out;
}

Literal candidate_value(EmotionKind kind, const Literal& consequence) {
  return kind == EmotionKind::Joy ? consequence : consequence.complement();
}

namespace {

void sort_by_id(std::vector<Argument>& args) {
  std::sort(args.begin(), args.end(),
            [](const Argument& a, const Argument& b) { return a.id() < b.id(); });
  args.erase(std::unique(args.begin(), args.end(),
                         [](const Argument& a, const Argument& b) {
                           return a.id() == b.id();
                         }),
             args.end());
}

}  // namespace

ArgumentBatch arguments_for(const std::set<BackgroundRule>& rules,
                            const Observation& o) {
  ArgumentBatch batch;
  const Expression& e = o.expression;

  if (e.form == Expression::Form::Complete) {
    // Complete information needs no rule lookup.
    batch.arguments.push_back(
        {Argument::Polarity::Supports, *e.value, o.index, o.action, e.kind});
    return batch;
  }

  Argument::Polarity polarity = e.form == Expression::Form::Incomplete
                                    ? Argument::Polarity::Supports
                                    : Argument::Polarity::Opposes;
  for (const auto& rule : rules) {
    if (rule.action != o.action) continue;
    batch.arguments.push_back(
        {polarity, candidate_value(e.kind, rule.consequence), o.index, o.action, e.kind});
  }
  sort_by_id(batch.arguments);

  if (batch.arguments.empty()) {
    batch.notes.push_back("obs " + std::to_string(o.index) +
                          ": no background rules for action '" + o.action +
                          "'; no arguments constructed");
  }
  return batch;
}

std::vector<Argument> build_arguments(const std::set<BackgroundRule>& rules,
                                      const std::vector<Observation>& history) {
  std::vector<Argument> out;
  for (const auto& o : history) {
    auto batch = arguments_for(rules, o);
    out.insert(out.end(), batch.arguments.begin(), batch.arguments.end());
  }
  sort_by_id(out);
  return out;
}

}  // namespace vinfer
