#include "vinfer/argumentation.hpp"

#include <algorithm>

namespace vinfer {

const char* to_string(Label label) {
  switch (label) {
    case Label::In:
      return "in";
    case Label::Out:
      return "out";
    case Label::Undec:
      return "undec";
  }
  return "?";
}

bool attacks_argument(const Argument& attacker, const Argument& target) {
  using P = Argument::Polarity;
  // Mutual conflict between same-event supporting arguments for different
  // values: only one emotion is expressed per observation.
  if (attacker.polarity == P::Supports && target.polarity == P::Supports) {
    return attacker.obs_index == target.obs_index && attacker.value != target.value;
  }
  // A blocking argument attacks every supporter of the value it opposes.
  if (attacker.polarity == P::Opposes && target.polarity == P::Supports) {
    return attacker.value == target.value;
  }
  return false;
}

ArgumentationFramework build_afv(const std::vector<Argument>& args) {
  ArgumentationFramework af;
  for (const auto& a : args) {
    if (!af.arguments.insert(a.id()).second) {
      throw FrameworkError("duplicate argument id '" + a.id() + "'");
    }
  }
  for (const auto& a : args) {
    for (const auto& b : args) {
      if (attacks_argument(a, b)) af.attacks.insert({a.id(), b.id()});
    }
  }
  return af;
}

namespace {

std::map<std::string, std::set<std::string>> attackers_of(
    const ArgumentationFramework& af) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& id : af.arguments) out[id];
  for (const auto& [from, to] : af.attacks) out[to].insert(from);
  return out;
}

}  // namespace

Labelling grounded(const ArgumentationFramework& af) {
  auto attackers = attackers_of(af);
  Labelling labelling;

  bool changed = true;
  while (changed) {
    changed = false;
    // In: every attacker already Out.
    for (const auto& id : af.arguments) {
      if (labelling.contains(id)) continue;
      const auto& atts = attackers[id];
      bool all_out = std::all_of(atts.begin(), atts.end(), [&](const std::string& a) {
        auto it = labelling.find(a);
        return it != labelling.end() && it->second == Label::Out;
      });
      if (all_out) {
        labelling[id] = Label::In;
        changed = true;
      }
    }
    // Out: some attacker In.
    for (const auto& id : af.arguments) {
      if (labelling.contains(id)) continue;
      const auto& atts = attackers[id];
      bool any_in = std::any_of(atts.begin(), atts.end(), [&](const std::string& a) {
        auto it = labelling.find(a);
        return it != labelling.end() && it->second == Label::In;
      });
      if (any_in) {
        labelling[id] = Label::Out;
        changed = true;
      }
    }
  }

  for (const auto& id : af.arguments) {
    labelling.try_emplace(id, Label::Undec);
  }
  return labelling;
}

std::set<std::string> with_label(const Labelling& labelling, Label label) {
  std::set<std::string> out;
  for (const auto& [id, l] : labelling) {
    if (l == label) out.insert(id);
  }
  return out;
}

std::set<std::string> characteristic_oracle(const ArgumentationFramework& af) {
  auto attackers = attackers_of(af);

  auto attacked_by = [&](const std::set<std::string>& s) {
    std::set<std::string> out;
    for (const auto& [from, to] : af.attacks) {
      if (s.contains(from)) out.insert(to);
    }
    return out;
  };

  std::set<std::string> current;
  while (true) {
    std::set<std::string> defended_against = attacked_by(current);
    std::set<std::string> next;
    for (const auto& id : af.arguments) {
      const auto& atts = attackers[id];
      bool defended = std::all_of(atts.begin(), atts.end(), [&](const std::string& a) {
        return defended_against.contains(a);
      });
      if (defended) next.insert(id);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<std::set<std::string>> enumerate_complete(const ArgumentationFramework& af,
                                                      std::size_t cap) {
  std::vector<std::string> ids(af.arguments.begin(), af.arguments.end());
  const std::size_t n = ids.size();
  if (n > cap) {
    throw EnumerationCapError(
        cap, "enumeration refused: " + std::to_string(n) +
                 " arguments exceed the cap of " + std::to_string(cap));
  }

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[ids[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(af.attacks.size());
  for (const auto& [from, to] : af.attacks) {
    edges.emplace_back(index.at(from), index.at(to));
  }

  std::vector<std::set<std::string>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [mask](std::size_t i) { return ((mask >> i) & 1U) != 0; };

    bool conflict_free = std::none_of(edges.begin(), edges.end(), [&](const auto& e) {
      return in(e.first) && in(e.second);
    });
    if (!conflict_free) continue;

    // defended(i): every attacker of i is attacked by the set.
    auto defended = [&](std::size_t i) {
      for (const auto& [from, to] : edges) {
        if (to != i) continue;
        bool countered = std::any_of(edges.begin(), edges.end(), [&](const auto& d) {
          return in(d.first) && d.second == from;
        });
        if (!countered) return false;
      }
      return true;
    };

    bool complete = true;
    for (std::size_t i = 0; i < n && complete; ++i) {
      if (in(i) != defended(i)) complete = false;  // admissible + contains all it defends
    }
    if (!complete) continue;

    std::set<std::string> ext;
    for (std::size_t i = 0; i < n; ++i) {
      if (in(i)) ext.insert(ids[i]);
    }
    out.push_back(std::move(ext));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vinfer
