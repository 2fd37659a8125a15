#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vinfer/observer.hpp"

namespace vinfer {

struct FrameworkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration refused because the framework is larger than the cap.
struct EnumerationCapError : std::runtime_error {
  std::size_t cap;
  explicit EnumerationCapError(std::size_t cap_, const std::string& msg)
      : std::runtime_error(msg), cap(cap_) {}
};

using Attack = std::pair<std::string, std::string>;

/// Abstract argumentation framework: argument ids and an attack relation.
struct ArgumentationFramework {
  std::set<std::string> arguments;
  std::set<Attack> attacks;

  bool operator==(const ArgumentationFramework&) const = default;
};

enum class Label { In, Out, Undec };

const char* to_string(Label label);

/// Total In/Out/Undec assignment over a framework's arguments.
using Labelling = std::map<std::string, Label>;

/// Does attacker a attack target b?  Two supporting arguments attack each
/// other iff they support different values from the same observation (only
/// one emotion is expressed per event); an opposing argument attacks every
/// supporting argument for the value it opposes. Opposing arguments are
/// never attacked.
bool attacks_argument(const Argument& attacker, const Argument& target);

/// Builds the framework over a set of arguments. Throws FrameworkError on
/// duplicate ids. Never produces self-attacks.
ArgumentationFramework build_afv(const std::vector<Argument>& args);

/// The unique grounded labelling as a least fixpoint: repeatedly label In
/// every argument all of whose attackers are Out, and Out every argument
/// with an In attacker; what remains is Undec.
Labelling grounded(const ArgumentationFramework& af);

/// Arguments with the given label, in lexicographic order.
std::set<std::string> with_label(const Labelling& labelling, Label label);

inline std::set<std::string> in_set(const Labelling& labelling) {
  return with_label(labelling, Label::In);
}

/// Independent route to the grounded extension: iterate the characteristic
/// function F(S) = { a : every attacker of a is attacked by S } from the
/// empty set to its fixpoint.
std::set<std::string> characteristic_oracle(const ArgumentationFramework& af);

inline constexpr std::size_t kEnumerationCap = 15;

/// Brute-force enumeration of all complete extensions (conflict-free,
/// admissible, containing every argument they defend). Refuses frameworks
/// with more than `cap` arguments.
std::vector<std::set<std::string>> enumerate_complete(
    const ArgumentationFramework& af, std::size_t cap = kEnumerationCap);

}  // namespace vinfer
