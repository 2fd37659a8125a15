#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "vinfer/scenario.hpp"

namespace vinfer {

/// Syntax error with 1-based position and an expected-token hint.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg);
};

/// Parses the line-oriented scenario format. Lines (any order; blank lines
/// and full-line '#' comments allowed):
///
///   agents: user, robot
///   atoms: cup_intact, have_coffee
///   actions: drop_full, drop_empty
///   state s0: cup_intact=1, have_coffee=1
///   trans: s0 -drop_full-> s1
///   epi user: s0->s0, s0->s1
///   val user @ s0: have_coffee, ~spilled
///   val user @ *: have_coffee
///   observer: robot
///   expresser: user
///   rule: drop_full => ~cup_intact
///   option disclose: full
///   obs 1: state=s1 action=drop_full express=distress?
///
/// Expressions: joy? / distress? (incomplete), joy(v) / distress(v)
/// (complete), none(joy) / none(distress) (explicit absence), auto /
/// auto(joy) / auto(distress) (synthesized from ground truth).
///
/// agents, atoms, actions, observer and expresser are required. Agents
/// without epi lines get the identity relation; "val a @ *" applies the
/// value set at every declared state. Observation indices must be positive
/// and strictly increasing. Undeclared ids are not syntax errors; they are
/// reported by validate_scenario.
Scenario parse_scenario(std::string_view text);

/// Canonical rendering: sections in fixed order, ids sorted, one space
/// between tokens. parse(serialize(s)) is structurally equal to s, and
/// structurally equal scenarios serialize to identical bytes. Epistemic
/// relations are written out in full (the identity default is expanded);
/// empty value sets are omitted.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace vinfer
