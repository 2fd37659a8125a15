#pragma once

#include <string>

#include "vinfer/engine.hpp"

namespace vinfer {

enum class ReportMode { Human, Structured };

/// Human mode: one block per step with new arguments, attacks and the three
/// verdict sets, then the final verdicts. Structured mode: one JSON
/// document with the same fields and stable key order.
std::string render_report(const Trace& trace, ReportMode mode);

/// Just the three verdict sets, human-readable.
std::string render_verdicts(const ValueVerdicts& verdicts);

}  // namespace vinfer
