#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vinfer/argumentation.hpp"
#include "vinfer/scenario.hpp"

namespace vinfer {

/// Rejected observation (index not greater than the last one).
struct SessionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scripted expression contradicting ground truth during simulation.
struct ConsistencyError : std::runtime_error {
  int obs_index;
  ConsistencyError(int obs_index_, const std::string& msg)
      : std::runtime_error(msg), obs_index(obs_index_) {}
};

/// What one observation added to the session.
struct ObserveDelta {
  std::vector<Argument> new_arguments;  // sorted by id
  std::vector<Attack> new_attacks;      // sorted
  std::vector<std::string> notes;

  bool operator==(const ObserveDelta&) const = default;
};

/// Which values the grounded labelling currently supports: believed holds a
/// value iff a supporting argument for it is In, believed-not iff an
/// opposing argument is In, undecided the remaining mentioned values.
struct ValueVerdicts {
  std::set<Literal> believed;
  std::set<Literal> believed_not;
  std::set<Literal> undecided;

  bool operator==(const ValueVerdicts&) const = default;
};

ValueVerdicts verdicts_of(const std::vector<Argument>& arguments,
                          const Labelling& labelling);

/// An observer's running inference about one expresser. Holds the history,
/// the framework built from it, and its grounded labelling; every
/// observation updates all three incrementally, with the invariant that the
/// result equals a from-scratch rebuild over the full history.
///
/// A session is a value: copy it to keep the pre-observation state.
/// Concurrent readers are safe; writers need single ownership.
class Session {
 public:
  Session() = default;
  Session(std::string expresser, std::set<BackgroundRule> rules);

  /// Appends one observation. Its index must exceed every stored index.
  ObserveDelta observe(const Observation& observation);

  ValueVerdicts verdicts() const;

  const std::string& expresser() const { return expresser_; }
  const std::set<BackgroundRule>& rules() const { return rules_; }
  const std::vector<Observation>& history() const { return history_; }
  const std::vector<Argument>& arguments() const { return arguments_; }
  const ArgumentationFramework& framework() const { return afv_; }
  const Labelling& labelling() const { return labelling_; }

 private:
  std::string expresser_;
  std::set<BackgroundRule> rules_;
  std::vector<Observation> history_;
  std::vector<Argument> arguments_;  // sorted by id
  ArgumentationFramework afv_;
  Labelling labelling_;
};

struct TraceStep {
  Observation observation;
  ObserveDelta delta;
  ValueVerdicts verdicts;

  bool operator==(const TraceStep&) const = default;
};

/// One entry per observation, in index order.
struct Trace {
  std::vector<TraceStep> steps;

  ValueVerdicts final_verdicts() const;

  bool operator==(const Trace&) const = default;
};

/// Ground-truth replay: resolves auto expressions from the world model,
/// rejects scripted expressions that contradict it (ConsistencyError naming
/// the observation index), and feeds the resulting observations through a
/// session, recording delta and verdicts per step.
Trace simulate(const Scenario& scenario);

}  // namespace vinfer
