#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "vinfer/emotions.hpp"

using namespace vinfer;
using fixtures::coffee_model;

namespace {

// kid buys ice cream: t0 (none) -buy-> t1 (has it), and values having it.
WorldModel icecream_model() {
  WorldModel m;
  m.agents = {"kid", "nanny_bot"};
  m.atoms = {"have_ice_cream"};
  m.actions = {"buy_ice_cream"};
  m.states = {{"t0", {{"have_ice_cream", false}}}, {"t1", {{"have_ice_cream", true}}}};
  m.transitions = {{"t0", "buy_ice_cream", "t1"}};
  for (const auto& agent : m.agents) {
    for (const auto& s : m.states) m.epistemic[agent].insert({s.id, s.id});
  }
  m.values[{"kid", "t1"}] = {Literal("have_ice_cream")};
  m.values[{"kid", "t0"}] = {Literal("have_ice_cream")};
  return m;
}

}  // namespace

TEST_CASE("distress holds for the destroyed valued literal") {
  WorldModel m = coffee_model();
  CHECK(holds_complete(m, "s1",
                       {"user", EmotionKind::Distress, "drop_full", Literal("have_coffee")}));
}

TEST_CASE("distress needs the value, not just the loss") {
  WorldModel m = coffee_model();
  // cup_intact was destroyed too, but the user does not hold it as a value
  CHECK_FALSE(holds_complete(
      m, "s1", {"user", EmotionKind::Distress, "drop_full", Literal("cup_intact")}));
}

TEST_CASE("joy holds for a gained valued literal") {
  WorldModel m = icecream_model();
  CHECK(holds_complete(m, "t1",
                       {"kid", EmotionKind::Joy, "buy_ice_cream", Literal("have_ice_cream")}));
  // no joy about the complement, and none at the pre-state
  CHECK_FALSE(holds_complete(
      m, "t1", {"kid", EmotionKind::Joy, "buy_ice_cream", Literal("have_ice_cream", false)}));
  CHECK_FALSE(holds_complete(
      m, "t0", {"kid", EmotionKind::Joy, "buy_ice_cream", Literal("have_ice_cream")}));
}

TEST_CASE("no emotion without values") {
  WorldModel m = coffee_model();
  m.values.clear();
  for (const auto& s : m.states) {
    for (auto kind : {EmotionKind::Joy, EmotionKind::Distress}) {
      for (const auto& v : m.literal_universe()) {
        CHECK_FALSE(holds_complete(m, s.id, {"user", kind, "drop_full", v}));
      }
      CHECK_FALSE(holds_incomplete(m, s.id, {"user", kind, "drop_full"}));
    }
  }
}

TEST_CASE("incomplete distress after dropping the full cup") {
  WorldModel m = coffee_model();
  CHECK(holds_incomplete(m, "s1", {"user", EmotionKind::Distress, "drop_full"}));
  CHECK(witnesses(m, "s1", {"user", EmotionKind::Distress, "drop_full"}) ==
        std::set<Literal>{Literal("have_coffee")});
}

TEST_CASE("no distress witness after dropping the empty cup") {
  WorldModel m = coffee_model();
  CHECK_FALSE(holds_incomplete(m, "s3", {"user", EmotionKind::Distress, "drop_empty"}));
  CHECK(witnesses(m, "s3", {"user", EmotionKind::Distress, "drop_empty"}).empty());
}

TEST_CASE("the complete-emotion formula spells out the belief conjunction") {
  CompleteEmotion e{"user", EmotionKind::Distress, "drop_full", Literal("have_coffee")};
  Formula f = complete_emotion_formula(e);
  WorldModel m = coffee_model();
  for (const auto& s : m.states) {
    CHECK(eval(m, s.id, f) == holds_complete(m, s.id, e));
  }
}

TEST_CASE("emotions reject undeclared ids") {
  WorldModel m = coffee_model();
  CHECK_THROWS_AS(
      holds_complete(m, "s1", {"user", EmotionKind::Distress, "pour", Literal("have_coffee")}),
      ModelError);
  CHECK_THROWS_AS(holds_incomplete(m, "s9", {"user", EmotionKind::Distress, "drop_full"}),
                  ModelError);
}

TEST_CASE("incomplete emotion is exactly the witnessed disjunction") {
  std::mt19937 rng(1801);
  for (int round = 0; round < 150; ++round) {
    WorldModel m = testgen::random_model(rng);
    for (const auto& s : m.states) {
      for (const auto& agent : m.agents) {
        for (const auto& action : m.actions) {
          for (auto kind : {EmotionKind::Joy, EmotionKind::Distress}) {
            IncompleteEmotion e{agent, kind, action};
            auto found = witnesses(m, s.id, e);
            bool any = false;
            for (const auto& v : m.literal_universe()) {
              bool complete = holds_complete(m, s.id, {agent, kind, action, v});
              any = any || complete;
              CHECK(complete == found.contains(v));
            }
            CHECK(holds_incomplete(m, s.id, e) == any);
            CHECK(holds_incomplete(m, s.id, e) == !found.empty());
          }
        }
      }
    }
  }
}

TEST_CASE("witnesses never pair a literal with its complement under reflexive belief") {
  std::mt19937 rng(1802);
  for (int round = 0; round < 150; ++round) {
    WorldModel m = testgen::random_model(rng, 6, 3, testgen::EpiShape::Reflexive);
    for (const auto& s : m.states) {
      for (const auto& agent : m.agents) {
        for (const auto& action : m.actions) {
          for (auto kind : {EmotionKind::Joy, EmotionKind::Distress}) {
            auto found = witnesses(m, s.id, {agent, kind, action});
            for (const auto& v : found) {
              CHECK_FALSE(found.contains(v.complement()));
            }
          }
        }
      }
    }
  }
}
