#pragma once

#include <compare>
#include <string>
#include <utility>

namespace vinfer {

/// A propositional atom or its negation. Agent values are literals.
struct Literal {
  std::string atom;
  bool positive = true;

  Literal() = default;
  explicit Literal(std::string atom_, bool positive_ = true)
      : atom(std::move(atom_)), positive(positive_) {}

  static Literal negated(std::string atom_) { return Literal(std::move(atom_), false); }

  Literal complement() const { return Literal(atom, !positive); }

  /// Surface syntax: "x" for positive, "~x" for negative.
  std::string str() const { return positive ? atom : "~" + atom; }

  auto operator<=>(const Literal&) const = default;
};

}  // namespace vinfer
