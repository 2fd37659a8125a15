#pragma once

// Hand-built coffee-cup fixture so the lower layers can be tested without
// the scenario parser. tests that exercise the parser load the .scn file.

#include <fstream>
#include <sstream>
#include <string>

#include "vinfer/scenario.hpp"

namespace fixtures {

using namespace vinfer;

inline WorldModel coffee_model() {
  WorldModel m;
  m.agents = {"user", "robot"};
  m.atoms = {"cup_intact", "have_coffee"};
  m.actions = {"drop_full", "drop_empty"};
  m.states = {
      {"s0", {{"cup_intact", true}, {"have_coffee", true}}},
      {"s1", {{"cup_intact", false}, {"have_coffee", false}}},
      {"s2", {{"cup_intact", true}, {"have_coffee", false}}},
      {"s3", {{"cup_intact", false}, {"have_coffee", false}}},
  };
  m.transitions = {{"s0", "drop_full", "s1"}, {"s2", "drop_empty", "s3"}};
  for (const auto& agent : m.agents) {
    for (const auto& s : m.states) m.epistemic[agent].insert({s.id, s.id});
  }
  for (const auto& s : m.states) {
    m.values[{"user", s.id}] = {Literal("have_coffee")};
  }
  return m;
}

inline std::set<BackgroundRule> coffee_rules() {
  return {{"drop_full", Literal("cup_intact", false)},
          {"drop_full", Literal("have_coffee", false)},
          {"drop_empty", Literal("cup_intact", false)}};
}

inline Observation coffee_obs1() {
  return {1, "s1", "user", "drop_full", Expression::incomplete(EmotionKind::Distress)};
}

inline Observation coffee_obs2() {
  return {2, "s3", "user", "drop_empty", Expression::absent(EmotionKind::Distress)};
}

inline Scenario coffee_scenario() {
  Scenario sc;
  sc.model = coffee_model();
  sc.observer = "robot";
  sc.expresser = "user";
  sc.rules = coffee_rules();
  sc.script = {
      {1, "s1", "drop_full", Expression::incomplete(EmotionKind::Distress)},
      {2, "s3", "drop_empty", Expression::absent(EmotionKind::Distress)},
  };
  return sc;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string scenario_path(const std::string& name) {
  return std::string(VINFER_SCENARIO_DIR) + "/" + name;
}

}  // namespace fixtures
