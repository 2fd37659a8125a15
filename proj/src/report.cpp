#include "vinfer/report.hpp"

#include <sstream>

#include "json.hpp"

namespace vinfer {

namespace {

template <typename Render>
std::string join_set(const std::set<Literal>& values, Render render) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ", ";
    out += render(v);
  }
  return out.empty() ? "(none)" : out;
}

std::string literal_str(const Literal& v) { return v.str(); }

void human_verdicts(std::ostringstream& out, const ValueVerdicts& v) {
  out << "  believed:     " << join_set(v.believed, literal_str) << "\n";
  out << "  believed not: " << join_set(v.believed_not, literal_str) << "\n";
  out << "  undecided:    " << join_set(v.undecided, literal_str) << "\n";
}

std::string human_report(const Trace& trace) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    const Observation& obs = step.observation;
    out << "obs " << obs.index << ": " << obs.expresser << " at " << obs.state
        << " after " << obs.action << " expresses " << obs.expression.str() << "\n";
    for (const auto& arg : step.delta.new_arguments) {
      out << "  + " << arg.id() << " ("
          << (arg.polarity == Argument::Polarity::Supports ? "supports " : "opposes ")
          << arg.value.str() << ")\n";
    }
    for (const auto& [from, to] : step.delta.new_attacks) {
      out << "  + attack " << from << " -> " << to << "\n";
    }
    for (const auto& note : step.delta.notes) {
      out << "  note: " << note << "\n";
    }
    human_verdicts(out, step.verdicts);
  }
  out << "final:\n";
  human_verdicts(out, trace.final_verdicts());
  return out.str();
}

nlohmann::ordered_json literal_list(const std::set<Literal>& values) {
  auto list = nlohmann::ordered_json::array();
  for (const auto& v : values) list.push_back(v.str());
  return list;
}

nlohmann::ordered_json verdicts_json(const ValueVerdicts& v) {
  return {{"believed", literal_list(v.believed)},
          {"believed_not", literal_list(v.believed_not)},
          {"undecided", literal_list(v.undecided)}};
}

nlohmann::ordered_json structured_report(const Trace& trace) {
  nlohmann::ordered_json doc;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& step : trace.steps) {
    const Observation& obs = step.observation;
    nlohmann::ordered_json entry;
    entry["observation"] = {{"index", obs.index},
                            {"state", obs.state},
                            {"expresser", obs.expresser},
                            {"action", obs.action},
                            {"expression", obs.expression.str()}};
    auto args = nlohmann::ordered_json::array();
    for (const auto& arg : step.delta.new_arguments) {
      args.push_back(
          {{"id", arg.id()},
           {"polarity",
            arg.polarity == Argument::Polarity::Supports ? "supports" : "opposes"},
           {"value", arg.value.str()},
           {"obs_index", arg.obs_index},
           {"action", arg.action},
           {"kind", to_string(arg.kind)}});
    }
    entry["new_arguments"] = std::move(args);
    auto attacks = nlohmann::ordered_json::array();
    for (const auto& [from, to] : step.delta.new_attacks) {
      attacks.push_back({from, to});
    }
    entry["new_attacks"] = std::move(attacks);
    entry["notes"] = step.delta.notes;
    entry["verdicts"] = verdicts_json(step.verdicts);
    steps.push_back(std::move(entry));
  }
  doc["steps"] = std::move(steps);
  doc["final"] = verdicts_json(trace.final_verdicts());
  return doc;
}

}  // namespace

std::string render_report(const Trace& trace, ReportMode mode) {
  if (mode == ReportMode::Human) return human_report(trace);
  return structured_report(trace).dump(2) + "\n";
}

std::string render_verdicts(const ValueVerdicts& verdicts) {
  std::ostringstream out;
  human_verdicts(out, verdicts);
  return out.str();
}

}  // namespace vinfer
